#pragma once

// Finite ortholattices and orthomodular lattices on at most 64 elements.
//
// Element 0 is always the bottom and element size()-1 the top. Order, meet
// and join are tabulated once at validation time; after that a lattice is
// immutable and every query is O(1).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "omlkit/bits.hpp"
#include "omlkit/error.hpp"

namespace omlkit {

inline constexpr int kMaxElements = 64;

enum class Flavor { Ortholattice, Orthomodular };

inline std::string flavor_name(Flavor f) {
  return f == Flavor::Orthomodular ? "orthomodular" : "ortholattice";
}

class FiniteOrtholattice {
 public:
  /// Validates order data given as up-sets (`up[i]` holds every j with i <= j).
  static FiniteOrtholattice from_up_sets(std::vector<Mask> up, std::vector<int> ortho,
                                         std::string name = {});

  int size() const noexcept { return n_; }
  int bottom() const noexcept { return 0; }
  int top() const noexcept { return n_ - 1; }
  Mask all() const noexcept { return low_bits(n_); }
  const std::string& name() const noexcept { return name_; }
  Flavor flavor() const noexcept { return flavor_; }
  bool is_orthomodular() const noexcept { return flavor_ == Flavor::Orthomodular; }

  bool leq(int a, int b) const noexcept { return has(up_[a], b); }
  int meet(int a, int b) const noexcept { return meet_[idx(a, b)]; }
  int join(int a, int b) const noexcept { return join_[idx(a, b)]; }
  int ocomp(int a) const noexcept { return ortho_[a]; }

  Mask up_set(int a) const noexcept { return up_[a]; }
  Mask down_set(int a) const noexcept { return down_[a]; }
  /// Elements covering `a`.
  Mask upper_covers(int a) const noexcept { return covers_up_[a]; }
  Mask lower_covers(int a) const noexcept { return covers_down_[a]; }
  Mask atoms() const noexcept { return covers_up_[0]; }
  Mask coatoms() const noexcept { return covers_down_[n_ - 1]; }

  const std::vector<int>& ortho() const noexcept { return ortho_; }

  Mask ortho_image(Mask m) const noexcept {
    Mask out = 0;
    for_each_bit(m, [&](int a) { out |= bit(ortho_[a]); });
    return out;
  }

  /// Full reflexive order relation as sorted (i, j) pairs with i <= j.
  std::vector<std::pair<int, int>> leq_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) for_each_bit(up_[i], [&](int j) { out.emplace_back(i, j); });
    return out;
  }

  FiniteOrtholattice with_name(std::string name) const {
    FiniteOrtholattice copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  friend bool operator==(const FiniteOrtholattice& a, const FiniteOrtholattice& b) {
    return a.n_ == b.n_ && a.up_ == b.up_ && a.ortho_ == b.ortho_;
  }

 private:
  FiniteOrtholattice() = default;
  std::size_t idx(int a, int b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::string name_;
  Flavor flavor_ = Flavor::Ortholattice;
  std::vector<Mask> up_, down_, covers_up_, covers_down_;
  std::vector<int> ortho_;
  std::vector<std::uint8_t> meet_, join_;
};

inline FiniteOrtholattice FiniteOrtholattice::from_up_sets(std::vector<Mask> up,
                                                            std::vector<int> ortho,
                                                            std::string name) {
  const int n = static_cast<int>(up.size());
  if (n > kMaxElements) throw Error(ErrorKind::SizeCap, "more than 64 elements");
  if (n < 2) throw Error(ErrorKind::NoBoundedLattice, "a lattice needs at least 2 elements");
  const Mask everything = low_bits(n);

  for (int i = 0; i < n; ++i) {
    if (!is_subset(up[i], everything)) throw Error(ErrorKind::NotAPartialOrder, "index out of range");
    if (!has(up[i], i)) {
      throw Error(ErrorKind::NotAPartialOrder, "not reflexive at " + std::to_string(i));
    }
  }
  std::vector<Mask> down(n, 0);
  for (int i = 0; i < n; ++i) for_each_bit(up[i], [&](int j) { down[j] |= bit(i); });
  for (int i = 0; i < n; ++i) {
    if ((up[i] & down[i]) != bit(i)) {
      throw Error(ErrorKind::NotAPartialOrder, "not antisymmetric at " + std::to_string(i));
    }
    bool transitive = true;
    for_each_bit(up[i], [&](int j) { transitive = transitive && is_subset(up[j], up[i]); });
    if (!transitive) throw Error(ErrorKind::NotAPartialOrder, "not transitive at " + std::to_string(i));
  }
  if (up[0] != everything || down[n - 1] != everything) {
    throw Error(ErrorKind::NoBoundedLattice, "element 0 must be least and element n-1 greatest");
  }

  FiniteOrtholattice L;
  L.n_ = n;
  L.name_ = std::move(name);
  L.meet_.assign(static_cast<std::size_t>(n * n), 0);
  L.join_.assign(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int glb = -1;
      int lub = -1;
      const Mask lower = down[a] & down[b];
      const Mask upper = up[a] & up[b];
      for_each_bit(lower, [&](int m) { if (is_subset(lower, down[m])) glb = m; });
      for_each_bit(upper, [&](int m) { if (is_subset(upper, up[m])) lub = m; });
      if (glb < 0 || lub < 0) {
        throw Error(ErrorKind::NoBoundedLattice,
                    "no " + std::string(glb < 0 ? "meet" : "join") + " for " + std::to_string(a) + "," +
                        std::to_string(b));
      }
      L.meet_[L.idx(a, b)] = L.meet_[L.idx(b, a)] = static_cast<std::uint8_t>(glb);
      L.join_[L.idx(a, b)] = L.join_[L.idx(b, a)] = static_cast<std::uint8_t>(lub);
    }
  }

  if (static_cast<int>(ortho.size()) != n) {
    throw Error(ErrorKind::BadOrthocomplement, "ortho must have one entry per element");
  }
  for (int a = 0; a < n; ++a) {
    const int c = ortho[a];
    if (c < 0 || c >= n || ortho[c] != a) throw Error(ErrorKind::BadOrthocomplement, "not an involution");
  }
  for (int a = 0; a < n; ++a) {
    const int c = ortho[a];
    if (L.meet(a, c) != 0 || L.join(a, c) != n - 1) {
      throw Error(ErrorKind::BadOrthocomplement, "element " + std::to_string(a) + " is not complemented");
    }
    bool reversing = true;
    for_each_bit(up[a], [&](int b) { reversing = reversing && has(up[ortho[b]], c); });
    if (!reversing) throw Error(ErrorKind::BadOrthocomplement, "not order-reversing");
  }

  L.up_ = std::move(up);
  L.down_ = std::move(down);
  L.ortho_ = std::move(ortho);
  L.covers_up_.assign(n, 0);
  L.covers_down_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    const Mask strict = L.up_[a] & ~bit(a);
    for_each_bit(strict, [&](int b) {
      if ((strict & L.down_[b] & ~bit(b)) == 0) {
        L.covers_up_[a] |= bit(b);
        L.covers_down_[b] |= bit(a);
      }
    });
  }

  bool orthomodular = true;
  for (int a = 0; a < n && orthomodular; ++a) {
    for_each_bit(L.up_[a], [&](int b) {
      orthomodular = orthomodular && L.join(a, L.meet(L.ortho_[a], b)) == b;
    });
  }
  L.flavor_ = orthomodular ? Flavor::Orthomodular : Flavor::Ortholattice;
  return L;
}

/// Builds and validates a lattice from a list of (i, j) pairs meaning i <= j.
/// The pairs must already form the full reflexive-transitive relation.
inline FiniteOrtholattice validate(int size, const std::vector<std::pair<int, int>>& leq,
                                   std::vector<int> ortho, std::string name = {}) {
  if (size > kMaxElements) throw Error(ErrorKind::SizeCap, "more than 64 elements");
  if (size < 2) throw Error(ErrorKind::NoBoundedLattice, "a lattice needs at least 2 elements");
  std::vector<Mask> up(static_cast<std::size_t>(size), 0);
  for (auto [i, j] : leq) {
    if (i < 0 || j < 0 || i >= size || j >= size) {
      throw Error(ErrorKind::NotAPartialOrder, "pair index out of range");
    }
    up[i] |= bit(j);
  }
  return FiniteOrtholattice::from_up_sets(std::move(up), std::move(ortho), std::move(name));
}

/// Builds a lattice from generating pairs (typically covers); the reflexive
/// transitive closure is taken before validation.
inline FiniteOrtholattice from_covers(int size, const std::vector<std::pair<int, int>>& covers,
                                      std::vector<int> ortho, std::string name = {}) {
  if (size > kMaxElements) throw Error(ErrorKind::SizeCap, "more than 64 elements");
  if (size < 2) throw Error(ErrorKind::NoBoundedLattice, "a lattice needs at least 2 elements");
  std::vector<Mask> up(static_cast<std::size_t>(size), 0);
  for (int i = 0; i < size; ++i) up[i] = bit(i);
  for (auto [i, j] : covers) {
    if (i < 0 || j < 0 || i >= size || j >= size) {
      throw Error(ErrorKind::NotAPartialOrder, "pair index out of range");
    }
    up[i] |= bit(j);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < size; ++i) {
      Mask next = up[i];
      for_each_bit(up[i], [&](int j) { next |= up[j]; });
      if (next != up[i]) {
        up[i] = next;
        changed = true;
      }
    }
  }
  return FiniteOrtholattice::from_up_sets(std::move(up), std::move(ortho), std::move(name));
}

inline int meet(const FiniteOrtholattice& L, int a, int b) { return L.meet(a, b); }
inline int join(const FiniteOrtholattice& L, int a, int b) { return L.join(a, b); }
inline bool leq(const FiniteOrtholattice& L, int a, int b) { return L.leq(a, b); }
inline int ocomp(const FiniteOrtholattice& L, int a) { return L.ocomp(a); }

namespace detail {

// a = (a & b) | (a & b'), without checking that L is orthomodular.
inline bool commutes_unchecked(const FiniteOrtholattice& L, int a, int b) {
  return L.join(L.meet(a, b), L.meet(a, L.ocomp(b))) == a;
}

}  // namespace detail

inline bool commutes(const FiniteOrtholattice& L, int a, int b) {
  if (!L.is_orthomodular()) throw Error(ErrorKind::FlavorError, "commutation needs an orthomodular lattice");
  return detail::commutes_unchecked(L, a, b);
}

/// Least subalgebra containing `seed`.
inline Mask generated_subalgebra(const FiniteOrtholattice& L, Mask seed) {
  Mask m = (seed & L.all()) | bit(L.bottom()) | bit(L.top());
  for (;;) {
    Mask next = m | L.ortho_image(m);
    const std::vector<int> members = bits_of(next);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        next |= bit(L.meet(members[i], members[j])) | bit(L.join(members[i], members[j]));
      }
    }
    if (next == m) return m;
    m = next;
  }
}

inline bool is_subalgebra(const FiniteOrtholattice& L, Mask s) {
  return is_subset(s, L.all()) && generated_subalgebra(L, s) == s;
}

/// True when the closed set `s` is a Boolean subalgebra: its elements commute
/// pairwise and the induced lattice is distributive.
inline bool is_boolean(const FiniteOrtholattice& L, Mask s) {
  const std::vector<int> members = bits_of(s);
  for (int a : members) {
    for (int b : members) {
      if (b > a) break;
      if (!detail::commutes_unchecked(L, a, b) || !detail::commutes_unchecked(L, b, a)) return false;
    }
  }
  for (int a : members) {
    for (int b : members) {
      for (int c : members) {
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
      }
    }
  }
  return true;
}

inline bool is_boolean_lattice(const FiniteOrtholattice& L) { return is_boolean(L, L.all()); }

inline constexpr std::size_t kDefaultNodeCap = 100000;

/// All subalgebras (or only the Boolean ones) as masks sorted ascending.
///
/// Frontier extension: every subalgebra is reached from {0,1} by adding one
/// element at a time and closing, and each intermediate step of a Boolean
/// subalgebra is itself Boolean, so the search is complete for both families.
inline std::vector<Mask> subalgebra_masks(const FiniteOrtholattice& L, bool boolean_only,
                                          std::size_t node_cap = kDefaultNodeCap) {
  std::unordered_set<Mask> seen;
  std::vector<Mask> accepted;
  std::deque<Mask> frontier;
  const Mask least = generated_subalgebra(L, 0);
  seen.insert(least);
  accepted.push_back(least);
  frontier.push_back(least);
  while (!frontier.empty()) {
    const Mask s = frontier.front();
    frontier.pop_front();
    for (int e = 0; e < L.size(); ++e) {
      if (has(s, e) || L.ocomp(e) < e) continue;
      if (boolean_only) {
        bool ok = true;
        for_each_bit(s, [&](int a) { ok = ok && detail::commutes_unchecked(L, e, a); });
        if (!ok) continue;
      }
      const Mask t = generated_subalgebra(L, s | bit(e));
      if (!seen.insert(t).second) continue;
      if (boolean_only && !is_boolean(L, t)) continue;
      if (accepted.size() >= node_cap) {
        throw Error(ErrorKind::ExplosionCap, "more than " + std::to_string(node_cap) + " subalgebras");
      }
      accepted.push_back(t);
      frontier.push_back(t);
    }
  }
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

/// Maximal Boolean subalgebras, ascending by mask.
inline std::vector<Mask> blocks(const FiniteOrtholattice& L, std::size_t node_cap = kDefaultNodeCap) {
  if (!L.is_orthomodular()) throw Error(ErrorKind::FlavorError, "blocks are defined for orthomodular lattices");
  const std::vector<Mask> all = subalgebra_masks(L, true, node_cap);
  std::vector<Mask> out;
  for (Mask x : all) {
    bool maximal = std::none_of(all.begin(), all.end(), [&](Mask y) { return y != x && is_subset(x, y); });
    if (maximal) out.push_back(x);
  }
  return out;
}

/// The sub-ortholattice on the closed set `s`, relabeled in ascending index order.
inline FiniteOrtholattice restrict_to(const FiniteOrtholattice& L, Mask s, std::string name = {}) {
  const std::vector<int> members = bits_of(s);
  std::vector<int> local(static_cast<std::size_t>(L.size()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  std::vector<Mask> up(members.size(), 0);
  std::vector<int> ortho(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for_each_bit(L.up_set(members[i]) & s, [&](int j) { up[i] |= bit(local[j]); });
    ortho[i] = local[L.ocomp(members[i])];
  }
  return FiniteOrtholattice::from_up_sets(std::move(up), std::move(ortho), std::move(name));
}

// ---------------------------------------------------------------------------
// Morphisms

enum class MorphismKind { Hom, Embedding, Iso };

inline std::string kind_name(MorphismKind k) {
  switch (k) {
    case MorphismKind::Hom: return "hom";
    case MorphismKind::Embedding: return "embedding";
    case MorphismKind::Iso: return "iso";
  }
  return "hom";
}

/// Element map between two ortholattices; `map[a]` is the image of element a.
struct Morphism {
  std::vector<int> map;
  MorphismKind kind = MorphismKind::Hom;

  int operator()(int a) const { return map[a]; }
  Mask image(Mask m) const {
    Mask out = 0;
    for_each_bit(m, [&](int a) { out |= bit(map[a]); });
    return out;
  }
  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism& a, const Morphism& b) { return a.map <=> b.map; }
};

/// Strongest kind the map satisfies, or nullopt when it is not a homomorphism.
inline std::optional<MorphismKind> classify_map(const FiniteOrtholattice& L, const FiniteOrtholattice& M,
                                                const std::vector<int>& map) {
  const int n = L.size();
  if (static_cast<int>(map.size()) != n) return std::nullopt;
  for (int v : map) {
    if (v < 0 || v >= M.size()) return std::nullopt;
  }
  if (map[L.bottom()] != M.bottom() || map[L.top()] != M.top()) return std::nullopt;
  for (int a = 0; a < n; ++a) {
    if (map[L.ocomp(a)] != M.ocomp(map[a])) return std::nullopt;
    for (int b = a + 1; b < n; ++b) {
      if (map[L.meet(a, b)] != M.meet(map[a], map[b])) return std::nullopt;
      if (map[L.join(a, b)] != M.join(map[a], map[b])) return std::nullopt;
    }
  }
  Mask hit = 0;
  for (int v : map) hit |= bit(v);
  if (popcount(hit) != n) return MorphismKind::Hom;
  if (M.size() != n) return MorphismKind::Embedding;
  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) inverse[map[a]] = a;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (L.leq(inverse[x], inverse[y]) != M.leq(x, y)) return MorphismKind::Embedding;
    }
  }
  return MorphismKind::Iso;
}

inline bool is_valid_morphism(const FiniteOrtholattice& L, const FiniteOrtholattice& M, const Morphism& f) {
  const auto kind = classify_map(L, M, f.map);
  if (!kind) return false;
  switch (f.kind) {
    case MorphismKind::Hom: return true;
    case MorphismKind::Embedding: return *kind != MorphismKind::Hom;
    case MorphismKind::Iso: return *kind == MorphismKind::Iso;
  }
  return false;
}

inline Morphism identity_morphism(const FiniteOrtholattice& L) {
  Morphism f;
  f.map.resize(static_cast<std::size_t>(L.size()));
  for (int a = 0; a < L.size(); ++a) f.map[a] = a;
  f.kind = MorphismKind::Iso;
  return f;
}

/// g after f.
inline Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism out;
  out.map.reserve(f.map.size());
  for (int v : f.map) out.map.push_back(g.map[v]);
  out.kind = (f.kind == MorphismKind::Iso && g.kind == MorphismKind::Iso) ? MorphismKind::Iso
             : (f.kind != MorphismKind::Hom && g.kind != MorphismKind::Hom) ? MorphismKind::Embedding
                                                                              : MorphismKind::Hom;
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism oracle

namespace detail {

inline std::vector<int> chain_heights(const FiniteOrtholattice& L) {
  // Elements sorted by down-set size form a linear extension.
  std::vector<int> order(static_cast<std::size_t>(L.size()));
  for (int a = 0; a < L.size(); ++a) order[a] = a;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return popcount(L.down_set(a)) < popcount(L.down_set(b)); });
  std::vector<int> h(static_cast<std::size_t>(L.size()), 0);
  for (int a : order) {
    for_each_bit(L.lower_covers(a), [&](int b) { h[a] = std::max(h[a], h[b] + 1); });
  }
  return h;
}

struct ElementSignature {
  int height, up_degree, down_degree, ortho_height;
  bool self_ortho;
  friend bool operator==(const ElementSignature&, const ElementSignature&) = default;
};

inline std::vector<ElementSignature> element_signatures(const FiniteOrtholattice& L) {
  const std::vector<int> h = chain_heights(L);
  std::vector<ElementSignature> out;
  for (int a = 0; a < L.size(); ++a) {
    out.push_back({h[a], popcount(L.upper_covers(a)), popcount(L.lower_covers(a)), h[L.ocomp(a)],
                   L.ocomp(a) == a});
  }
  return out;
}

// Backtracking over order- and ortho-preserving bijections. `visit` returns
// false to stop the search.
template <typename Visit>
void search_isomorphisms(const FiniteOrtholattice& L, const FiniteOrtholattice& M, Visit&& visit) {
  const int n = L.size();
  if (M.size() != n) return;
  const auto sig_l = element_signatures(L);
  const auto sig_m = element_signatures(M);
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  Mask used = 0;
  bool stop = false;

  auto consistent = [&](int a, int x) {
    if (sig_l[a] != sig_m[x]) return false;
    if (has(used, x)) return false;
    for (int b = 0; b < n; ++b) {
      if (map[b] < 0) continue;
      if (L.leq(a, b) != M.leq(x, map[b]) || L.leq(b, a) != M.leq(map[b], x)) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, int a) -> void {
    while (a < n && map[a] >= 0) ++a;
    if (a == n) {
      Morphism f{map, MorphismKind::Iso};
      if (!visit(f)) stop = true;
      return;
    }
    const int ac = L.ocomp(a);
    for (int x = 0; x < n && !stop; ++x) {
      if (!consistent(a, x)) continue;
      map[a] = x;
      used |= bit(x);
      const int xc = M.ocomp(x);
      if (ac == a) {
        if (xc == x) self(self, a + 1);
      } else if (consistent(ac, xc)) {
        map[ac] = xc;
        used |= bit(xc);
        self(self, a + 1);
        map[ac] = -1;
        used &= ~bit(xc);
      }
      map[a] = -1;
      used &= ~bit(x);
    }
  };
  recurse(recurse, 0);
}

}  // namespace detail

/// Some ortholattice isomorphism L -> M, or nullopt when none exists.
inline std::optional<Morphism> find_isomorphism(const FiniteOrtholattice& L, const FiniteOrtholattice& M) {
  std::optional<Morphism> found;
  detail::search_isomorphisms(L, M, [&](const Morphism& f) {
    found = f;
    return false;
  });
  return found;
}

/// Every isomorphism L -> M in lexicographic order of the element map.
inline std::vector<Morphism> all_isomorphisms(const FiniteOrtholattice& L, const FiniteOrtholattice& M) {
  std::vector<Morphism> out;
  detail::search_isomorphisms(L, M, [&](const Morphism& f) {
    out.push_back(f);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Morphism> automorphisms(const FiniteOrtholattice& L) { return all_isomorphisms(L, L); }

}  // namespace omlkit
