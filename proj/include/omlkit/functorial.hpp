#pragma once

// The contravariant subalgebra functor: a homomorphism f: L -> M induces the
// preimage map Sub(M) -> Sub(L). Includes a brute-force homomorphism
// enumerator used to decide when f is recoverable from its preimage map.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omlkit/catalog.hpp"
#include "omlkit/lattice.hpp"
#include "omlkit/poset.hpp"
#include "omlkit/subalgebras.hpp"

namespace omlkit {

inline constexpr std::size_t kMaxHoms = 100000;

/// All homomorphisms L -> M in lexicographic order of the element map.
/// Each choice is propagated through ortho, meets and joins before branching.
inline std::vector<Morphism> enumerate_homs(const FiniteOrtholattice& L, const FiniteOrtholattice& M,
                                            std::size_t cap = kMaxHoms) {
  const int n = L.size();
  std::vector<Morphism> out;

  // Assigns f(a) = x and closes under the operations; false on conflict.
  auto propagate = [&](std::vector<int>& map, int a, int x) {
    std::vector<int> work;
    auto set = [&](int e, int v) {
      if (map[e] < 0) {
        map[e] = v;
        work.push_back(e);
        return true;
      }
      return map[e] == v;
    };
    if (!set(a, x)) return false;
    while (!work.empty()) {
      const int e = work.back();
      work.pop_back();
      if (!set(L.ocomp(e), M.ocomp(map[e]))) return false;
      for (int b = 0; b < n; ++b) {
        if (map[b] < 0) continue;
        if (!set(L.meet(e, b), M.meet(map[e], map[b]))) return false;
        if (!set(L.join(e, b), M.join(map[e], map[b]))) return false;
      }
    }
    return true;
  };

  std::vector<int> start(static_cast<std::size_t>(n), -1);
  if (!propagate(start, L.bottom(), M.bottom()) || !propagate(start, L.top(), M.top())) return out;

  auto recurse = [&](auto&& self, const std::vector<int>& map) -> void {
    const auto next = std::find(map.begin(), map.end(), -1);
    if (next == map.end()) {
      if (out.size() >= cap) throw Error(ErrorKind::SizeCap, "too many homomorphisms");
      Morphism f{map, MorphismKind::Hom};
      if (auto kind = classify_map(L, M, map)) f.kind = *kind;
      out.push_back(std::move(f));
      return;
    }
    const int a = static_cast<int>(next - map.begin());
    for (int x = 0; x < M.size(); ++x) {
      std::vector<int> trial = map;
      if (propagate(trial, a, x)) self(self, trial);
    }
  };
  recurse(recurse, start);
  std::sort(out.begin(), out.end());
  return out;
}

/// Node map Sub(M) -> Sub(L) sending x to its preimage under f.
struct PreimageMap {
  std::vector<Node> map;
  friend bool operator==(const PreimageMap&, const PreimageMap&) = default;
};

inline PreimageMap preimage_functor(const Morphism& f, const SubalgebraPoset& SubL, const SubalgebraPoset& SubM) {
  PreimageMap out;
  out.map.reserve(SubM.size());
  for (Node x = 0; x < SubM.size(); ++x) {
    const Mask target = SubM.node(x);
    Mask pre = 0;
    for (int a = 0; a < static_cast<int>(f.map.size()); ++a) {
      if (has(target, f.map[a])) pre |= bit(a);
    }
    out.map.push_back(SubL.index_of(pre));
  }
  return out;
}

/// Finite-lattice form of the morphism condition: binary meets and the top
/// (the empty meet) are preserved.
inline bool preserves_meets(const AbstractPoset& source, const AbstractPoset& target, const std::vector<Node>& map) {
  const auto top_s = source.greatest();
  const auto top_t = target.greatest();
  if (!top_s || !top_t || map[*top_s] != *top_t) return false;
  for (Node x = 0; x < source.size(); ++x) {
    for (Node y = x + 1; y < source.size(); ++y) {
      const auto m = poset_meet(source, x, y);
      const auto mt = poset_meet(target, map[x], map[y]);
      if (!m || !mt || map[*m] != *mt) return false;
    }
  }
  return true;
}

inline Mask image_of(const Morphism& f) { return f.image(low_bits(static_cast<int>(f.map.size()))); }

enum class RecoveryClass { TwoElementImage, FourBlockImage, Determined };

inline std::string to_string(RecoveryClass c) {
  switch (c) {
    case RecoveryClass::TwoElementImage: return "TwoElementImage";
    case RecoveryClass::FourBlockImage: return "FourBlockImage";
    case RecoveryClass::Determined: return "Determined";
  }
  return "Determined";
}

struct RecoveryReport {
  RecoveryClass kind = RecoveryClass::Determined;
  Mask image = 0;
  /// FourBlockImage: a different hom with the same preimage map.
  std::optional<Morphism> witness;
  /// FourBlockImage: witness verified; Determined: f is the only hom with its
  /// preimage map. Always true for TwoElementImage.
  bool verified = false;
};

inline RecoveryReport classify_recovery(const FiniteOrtholattice& L, const FiniteOrtholattice& M, const Morphism& f) {
  if (!classify_map(L, M, f.map)) throw Error(ErrorKind::MalformedInput, "map is not a homomorphism");
  RecoveryReport report;
  report.image = image_of(f);
  if (popcount(report.image) == 2) {
    report.kind = RecoveryClass::TwoElementImage;
    report.verified = true;
    return report;
  }
  const SubalgebraPoset sub_l = sub(L);
  const SubalgebraPoset sub_m = sub(M);
  const PreimageMap pre_f = preimage_functor(f, sub_l, sub_m);

  const std::vector<int> members = bits_of(report.image);
  for (Mask block : blocks(restrict_to(M, report.image))) {
    if (popcount(block) != 4) continue;
    // Swap the two inner elements of the block; identity elsewhere on Im f.
    const std::vector<int> local = bits_of(block);
    const int c = members[local[1]];
    const int cc = members[local[2]];
    Morphism g = f;
    for (int& v : g.map) {
      if (v == c) v = cc;
      else if (v == cc) v = c;
    }
    g.kind = classify_map(L, M, g.map).value_or(MorphismKind::Hom);
    report.kind = RecoveryClass::FourBlockImage;
    report.verified = classify_map(L, M, g.map).has_value() && g.map != f.map &&
                      preimage_functor(g, sub_l, sub_m) == pre_f;
    report.witness = std::move(g);
    return report;
  }

  report.kind = RecoveryClass::Determined;
  report.verified = true;
  for (const Morphism& g : enumerate_homs(L, M)) {
    if (g.map != f.map && preimage_functor(g, sub_l, sub_m) == pre_f) report.verified = false;
  }
  return report;
}

struct NonFullnessReport {
  /// The map on Sub(2^3) sending one atom to the bottom and fixing the rest.
  std::vector<Node> map;
  bool meets_preserved = false;
  bool realized_by_hom = true;
  /// The 3-element chain is not Sub(L) for any catalog lattice.
  bool chain_unrealized = false;
  /// The atom swap of 2^2 and the identity have the same preimage map.
  bool swap_matches_identity = false;
};

inline NonFullnessReport nonfull_witness() {
  NonFullnessReport report;
  const FiniteOrtholattice B = boolean_algebra(3);
  const SubalgebraPoset s = sub(B);
  const Node bottom = *s.order().least();
  // atoms of 2^3 are elements 1, 2, 4; collapse {0, 4, 3, 7}
  const Node collapsed = s.index_of(bit(0) | bit(4) | bit(3) | bit(7));
  report.map.resize(s.size());
  for (Node x = 0; x < s.size(); ++x) report.map[x] = x == collapsed ? bottom : x;
  report.meets_preserved = preserves_meets(s.order(), s.order(), report.map);
  report.realized_by_hom = false;
  for (const Morphism& f : enumerate_homs(B, B)) {
    if (preimage_functor(f, s, s).map == report.map) report.realized_by_hom = true;
  }

  const AbstractPoset chain = AbstractPoset::from_relation(3, [](Node i, Node j) { return i <= j; });
  report.chain_unrealized = true;
  for (const auto& name : catalog_oml_names()) {
    if (poset_isomorphic(chain, sub(catalog(name)).order())) report.chain_unrealized = false;
  }

  const FiniteOrtholattice B2 = boolean_algebra(2);
  const SubalgebraPoset s2 = sub(B2);
  const Morphism swap{{0, 2, 1, 3}, MorphismKind::Iso};
  report.swap_matches_identity =
      preimage_functor(swap, s2, s2) == preimage_functor(identity_morphism(B2), s2, s2);
  return report;
}

}  // namespace omlkit
