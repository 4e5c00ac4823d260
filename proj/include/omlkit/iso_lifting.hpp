#pragma once

// Lifting isomorphisms of BSub(L) and Sub(L) to isomorphisms of the
// underlying orthomodular lattices.
//
// A BSub isomorphism restricted to the interval below a block x is a Sub(x)
// isomorphism, so each block with more than four elements lifts uniquely
// through lift_boolean_iso. The blockwise lifts are glued; agreement on block
// intersections is guaranteed by the theory and checked at runtime. Blocks
// with exactly four elements admit two lifts each and are enumerated.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "omlkit/lattice.hpp"
#include "omlkit/poset.hpp"
#include "omlkit/sachs.hpp"
#include "omlkit/subalgebras.hpp"

namespace omlkit {

inline constexpr int kMaxFourElementChoices = 6;

struct LiftOptions {
  /// Return only the canonical choice on four-element blocks: the lower-index
  /// atom goes to the lower-index atom of the image block.
  bool canonical_only = false;
};

namespace detail {

// Translates masks between a lattice and the restriction to one of its subsets.
struct LocalFrame {
  std::vector<int> members;  // local -> global
  std::vector<int> local;    // global -> local, -1 outside

  LocalFrame(Mask s, int global_size) : members(bits_of(s)), local(static_cast<std::size_t>(global_size), -1) {
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  }
  Mask to_global(Mask m) const {
    Mask out = 0;
    for_each_bit(m, [&](int i) { out |= bit(members[i]); });
    return out;
  }
  std::optional<Mask> to_local(Mask m) const {
    Mask out = 0;
    bool inside = true;
    for_each_bit(m, [&](int g) {
      if (local[g] < 0) inside = false;
      else out |= bit(local[g]);
    });
    if (!inside) return std::nullopt;
    return out;
  }
};

// The unique Boolean isomorphism x -> phi(x) induced on the interval below a
// block x with more than four elements, as a partial global map.
inline std::vector<std::pair<int, int>> lift_block(const SubalgebraPoset& BSubL, const SubalgebraPoset& BSubM,
                                                   const std::vector<Node>& phi, Node x) {
  const FiniteOrtholattice& L = BSubL.owner();
  const FiniteOrtholattice& M = BSubM.owner();
  const Mask source = BSubL.node(x);
  const Mask target = BSubM.node(phi[x]);
  const LocalFrame lf(source, L.size());
  const LocalFrame mf(target, M.size());
  const SubalgebraPoset sub_x = sub(restrict_to(L, source));
  const SubalgebraPoset sub_y = sub(restrict_to(M, target));
  if (sub_x.size() != sub_y.size()) throw Error(ErrorKind::Inconsistent, "block intervals differ in size");

  std::vector<Node> phi_x(sub_x.size());
  for (Node i = 0; i < sub_x.size(); ++i) {
    const auto node = BSubL.find(lf.to_global(sub_x.node(i)));
    if (!node) throw Error(ErrorKind::Inconsistent, "subalgebra of a block missing from BSub(L)");
    const auto local = mf.to_local(BSubM.node(phi[*node]));
    const auto image = local ? sub_y.find(*local) : std::nullopt;
    if (!image) throw Error(ErrorKind::Inconsistent, "phi leaves the interval below phi(x)");
    phi_x[i] = *image;
  }
  const std::vector<Morphism> lifts = lift_boolean_iso(sub_x, sub_y, phi_x);
  if (lifts.size() != 1) throw Error(ErrorKind::Inconsistent, "block lift is not unique");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < lf.members.size(); ++i) {
    out.emplace_back(lf.members[i], mf.members[lifts.front().map[i]]);
  }
  return out;
}

}  // namespace detail

/// Every OML isomorphism psi: L -> M with psi[y] = phi(y) for every Boolean
/// subalgebra y; 2^k of them for k four-element blocks.
inline std::vector<Morphism> lift_bsub_iso(const SubalgebraPoset& BSubL, const SubalgebraPoset& BSubM,
                                           const std::vector<Node>& phi, const LiftOptions& options = {}) {
  const FiniteOrtholattice& L = BSubL.owner();
  const FiniteOrtholattice& M = BSubM.owner();
  if (!L.is_orthomodular() || !M.is_orthomodular()) {
    throw Error(ErrorKind::FlavorError, "lifting needs orthomodular lattices");
  }
  require_order_iso(BSubL.order(), BSubM.order(), phi);
  if (L.size() != M.size()) throw Error(ErrorKind::Inconsistent, "lattices differ in size");

  std::vector<int> glued(static_cast<std::size_t>(L.size()), -1);
  glued[L.bottom()] = M.bottom();
  glued[L.top()] = M.top();
  auto assign = [&](int a, int c) {
    if (glued[a] >= 0 && glued[a] != c) {
      throw Error(ErrorKind::GlueConflict, "block lifts disagree at element " + std::to_string(a));
    }
    glued[a] = c;
  };

  struct FourBlock {
    int a;                   // lower-index non-bound element of z
    std::pair<int, int> c;   // non-bound elements of phi(z), ascending
  };
  std::vector<FourBlock> four_blocks;

  for (Node x : poset_maximal(BSubL.order())) {
    if (!is_maximal(BSubM.order(), phi[x])) {
      throw Error(ErrorKind::BlockMismatch, "phi maps a block to a non-maximal node");
    }
    const int size = popcount(BSubL.node(x));
    if (size > 4) {
      for (auto [a, c] : detail::lift_block(BSubL, BSubM, phi, x)) assign(a, c);
    } else if (size == 4) {
      const Mask inner_l = BSubL.node(x) & ~(bit(L.bottom()) | bit(L.top()));
      const Mask inner_m = BSubM.node(phi[x]) & ~(bit(M.bottom()) | bit(M.top()));
      if (popcount(inner_m) != 2) throw Error(ErrorKind::BlockMismatch, "four-element block maps to a larger block");
      const std::vector<int> cs = bits_of(inner_m);
      four_blocks.push_back({bits_of(inner_l).front(), {cs[0], cs[1]}});
    }
  }

  const int k = static_cast<int>(four_blocks.size());
  if (!options.canonical_only && k > kMaxFourElementChoices) {
    throw Error(ErrorKind::Unsupported, "more than 64 four-element block choices; use the canonical option");
  }
  const std::size_t combos = options.canonical_only ? 1 : (std::size_t{1} << k);
  std::vector<Morphism> out;
  for (std::size_t choice = 0; choice < combos; ++choice) {
    std::vector<int> map = glued;
    for (int i = 0; i < k; ++i) {
      const auto& fb = four_blocks[i];
      const bool swap = (choice >> i) & 1U;
      map[fb.a] = swap ? fb.c.second : fb.c.first;
      map[L.ocomp(fb.a)] = swap ? fb.c.first : fb.c.second;
    }
    if (std::find(map.begin(), map.end(), -1) != map.end()) {
      throw Error(ErrorKind::Inconsistent, "some element lies in no block");
    }
    Morphism f{std::move(map), MorphismKind::Iso};
    if (classify_map(L, M, f.map) != MorphismKind::Iso) {
      throw Error(ErrorKind::Inconsistent, "glued map is not an isomorphism");
    }
    for (Node y = 0; y < BSubL.size(); ++y) {
      if (f.image(BSubL.node(y)) != BSubM.node(phi[y])) {
        throw Error(ErrorKind::Inconsistent, "glued map does not induce phi");
      }
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Order-only test on Sub(L): the interval below x is dually isomorphic to a
/// partition lattice P_n, with n read off from the atom count 2^(n-1) - 1.
class BooleanNodeRecognizer {
 public:
  bool operator()(const AbstractPoset& sub_order, Node x) {
    const Interval below = interval(sub_order, x);
    const std::size_t atoms = below.poset.size() == 1 ? 0 : poset_atoms(below.poset).size();
    const std::size_t count = atoms + 1;
    if ((count & (count - 1)) != 0) return false;
    int n = 1;
    while ((std::size_t{1} << (n - 1)) < count) ++n;
    if (n > 6) return false;
    auto it = dual_partitions_.find(n);
    if (it == dual_partitions_.end()) it = dual_partitions_.emplace(n, partition_lattice(n).dual()).first;
    return poset_isomorphic(below.poset, it->second).has_value();
  }

 private:
  std::map<int, AbstractPoset> dual_partitions_;
};

inline bool recognize_boolean_node(const SubalgebraPoset& SubL, Node x) {
  return BooleanNodeRecognizer{}(SubL.order(), x);
}

inline std::vector<bool> boolean_node_flags(const AbstractPoset& sub_order) {
  BooleanNodeRecognizer recognize;
  std::vector<bool> out(sub_order.size());
  for (Node x = 0; x < sub_order.size(); ++x) out[x] = recognize(sub_order, x);
  return out;
}

/// Restricts a Sub(L) -> Sub(M) isomorphism to the order-recognized Boolean
/// nodes and lifts it.
inline std::vector<Morphism> lift_sub_iso(const SubalgebraPoset& SubL, const SubalgebraPoset& SubM,
                                          const std::vector<Node>& phi, const LiftOptions& options = {}) {
  require_order_iso(SubL.order(), SubM.order(), phi);
  const std::vector<bool> bool_l = boolean_node_flags(SubL.order());
  const std::vector<bool> bool_m = boolean_node_flags(SubM.order());
  std::vector<Mask> nodes_l, nodes_m;
  for (Node x = 0; x < SubL.size(); ++x) {
    if (bool_l[x] != bool_m[phi[x]]) {
      throw Error(ErrorKind::RestrictionMismatch, "phi does not preserve Boolean nodes");
    }
    if (bool_l[x]) nodes_l.push_back(SubL.node(x));
  }
  for (Node y = 0; y < SubM.size(); ++y) {
    if (bool_m[y]) nodes_m.push_back(SubM.node(y));
  }
  const SubalgebraPoset BSubL(SubL.owner(), nodes_l, SubFlavor::BSub);
  const SubalgebraPoset BSubM(SubM.owner(), nodes_m, SubFlavor::BSub);
  std::vector<Node> restricted(BSubL.size());
  for (Node i = 0; i < BSubL.size(); ++i) {
    restricted[i] = BSubM.index_of(SubM.node(phi[SubL.index_of(BSubL.node(i))]));
  }
  std::vector<Morphism> lifts = lift_bsub_iso(BSubL, BSubM, restricted, options);
  for (const auto& f : lifts) {
    for (Node x = 0; x < SubL.size(); ++x) {
      if (f.image(SubL.node(x)) != SubM.node(phi[x])) {
        throw Error(ErrorKind::Inconsistent, "lift does not induce phi on a non-Boolean subalgebra");
      }
    }
  }
  return lifts;
}

struct DeterminationReport {
  bool both_orthomodular = false;
  bool posets_isomorphic = false;
  bool lattices_isomorphic = false;
  /// An isomorphism was recovered by lifting the poset witness.
  bool lift_recovered = false;
  bool consistent = false;

  std::string summary() const {
    std::ostringstream os;
    os << "BSub posets isomorphic: " << (posets_isomorphic ? "yes" : "no") << '\n'
       << "lattices isomorphic: " << (lattices_isomorphic ? "yes" : "no") << '\n';
    if (posets_isomorphic && both_orthomodular) {
      os << "isomorphism recovered by lifting: " << (lift_recovered ? "yes" : "no") << '\n';
    }
    if (!both_orthomodular) {
      os << "outside OML hypothesis: determination is not claimed for ortholattices\n";
    } else {
      os << "consistent with determination by BSub: " << (consistent ? "yes" : "no") << '\n';
    }
    return os.str();
  }
};

inline DeterminationReport verify_determination(const FiniteOrtholattice& L, const FiniteOrtholattice& M,
                                                const EnumerateOptions& enumerate = {}) {
  DeterminationReport report;
  report.both_orthomodular = L.is_orthomodular() && M.is_orthomodular();
  const SubalgebraPoset bl = bsub(L, enumerate);
  const SubalgebraPoset bm = bsub(M, enumerate);
  const auto witness = poset_isomorphic(bl.order(), bm.order());
  report.posets_isomorphic = witness.has_value();
  report.lattices_isomorphic = find_isomorphism(L, M).has_value();
  if (witness && report.both_orthomodular) {
    const auto lifts = lift_bsub_iso(bl, bm, *witness, LiftOptions{true});
    report.lift_recovered = !lifts.empty() && is_valid_morphism(L, M, lifts.front());
  }
  report.consistent = !report.both_orthomodular ||
                      (report.posets_isomorphic == report.lattices_isomorphic &&
                       (!report.posets_isomorphic || report.lift_recovered));
  return report;
}

}  // namespace omlkit
