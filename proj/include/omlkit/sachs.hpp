#pragma once

// Subalgebras of finite Boolean algebras: dual and principal dual
// subalgebras, the partition duality, and lifting Sub(B) isomorphisms to
// Boolean isomorphisms.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "omlkit/lattice.hpp"
#include "omlkit/poset.hpp"
#include "omlkit/subalgebras.hpp"

namespace omlkit {

inline void require_boolean(const FiniteOrtholattice& B) {
  if (!is_boolean_lattice(B)) throw Error(ErrorKind::NotBoolean, "expected a Boolean algebra");
}

struct DualDecomposition {
  Mask subalgebra = 0;
  Mask ideal = 0;
  Mask filter = 0;
};

/// Splits x into the ideal {a : [0,a] in x} and its complementary filter;
/// nullopt when the two do not exhaust x.
inline std::optional<DualDecomposition> dual_decomposition(const FiniteOrtholattice& B, Mask x) {
  require_boolean(B);
  Mask ideal = 0;
  for_each_bit(x, [&](int a) {
    if (is_subset(B.down_set(a), x)) ideal |= bit(a);
  });
  const Mask filter = B.ortho_image(ideal);
  if ((ideal | filter) != x) return std::nullopt;
  return DualDecomposition{x, ideal, filter};
}

/// [0,a] together with [a',1].
inline Mask principal_dual_subalgebra(const FiniteOrtholattice& B, int a) {
  return B.down_set(a) | B.up_set(B.ocomp(a));
}

/// Order-only test on a subalgebra lattice: every atom incomparable to x
/// joins with x to an upper cover of x.
inline bool dual_order_test(const AbstractPoset& P, Node x) {
  for (Node y : poset_atoms(P)) {
    if (P.comparable(x, y)) continue;
    const auto j = poset_join(P, x, y);
    if (!j) return false;
    const auto& covers = P.upper_covers(x);
    if (std::find(covers.begin(), covers.end(), *j) == covers.end()) return false;
  }
  return true;
}

inline bool dual_order_test(const SubalgebraPoset& SubB, Node x) { return dual_order_test(SubB.order(), x); }

inline std::vector<bool> dual_order_flags(const AbstractPoset& P) {
  std::vector<bool> out(P.size());
  for (Node x = 0; x < P.size(); ++x) out[x] = dual_order_test(P, x);
  return out;
}

/// Order-only recognition of principal dual subalgebras, for every node at once.
inline std::vector<bool> pd_order_flags(const AbstractPoset& P) {
  const Node bottom = require_least(P);
  const auto top = P.greatest();
  const std::vector<bool> dual = dual_order_flags(P);
  const std::vector<Node> atoms = poset_atoms(P);
  std::vector<bool> is_atom(P.size(), false);
  for (Node a : atoms) is_atom[a] = true;

  std::vector<bool> out(P.size(), false);
  for (Node x = 0; x < P.size(); ++x) {
    if (x == bottom || (top && x == *top)) {
      out[x] = true;
      continue;
    }
    if (!dual[x]) continue;
    if (is_atom[x]) {
      out[x] = true;
      continue;
    }
    for (Node y = 0; y < P.size() && !out[x]; ++y) {
      if (!dual[y]) continue;
      const auto m = poset_meet(P, x, y);
      out[x] = m && is_atom[*m] && !dual[*m];
    }
  }
  return out;
}

inline bool pd_order_test(const AbstractPoset& P, Node x) { return pd_order_flags(P)[x]; }
inline bool pd_order_test(const SubalgebraPoset& SubB, Node x) { return pd_order_test(SubB.order(), x); }

// ---------------------------------------------------------------------------
// Partitions

/// Blocks of atom positions (0-based, position in ascending atom order),
/// each block sorted, blocks sorted by least member.
struct Partition {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Text form with 1-based atoms, e.g. "12|3|4".
inline std::string to_string(const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks) {
    if (!out.empty()) out += '|';
    for (int a : block) out += std::to_string(a + 1);
  }
  return out;
}

inline Partition parse_partition(const std::string& text) {
  Partition p;
  std::vector<int> block;
  for (char ch : text + "|") {
    if (ch == '|') {
      if (block.empty()) throw Error(ErrorKind::ParseError, "empty block in partition '" + text + "'");
      std::sort(block.begin(), block.end());
      p.blocks.push_back(block);
      block.clear();
    } else if (ch >= '1' && ch <= '9') {
      block.push_back(ch - '1');
    } else {
      throw Error(ErrorKind::ParseError, "bad character in partition '" + text + "'");
    }
  }
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

/// p refines q: every block of p lies inside a block of q.
inline bool refines(const Partition& p, const Partition& q) {
  for (const auto& b : p.blocks) {
    const bool inside = std::any_of(q.blocks.begin(), q.blocks.end(), [&](const auto& c) {
      return std::includes(c.begin(), c.end(), b.begin(), b.end());
    });
    if (!inside) return false;
  }
  return true;
}

/// All partitions of an n-set, in restricted-growth-string order.
inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    Partition p;
    for (int i = 0; i < n; ++i) {
      if (rgs[i] >= static_cast<int>(p.blocks.size())) p.blocks.emplace_back();
      p.blocks[rgs[i]].push_back(i);
    }
    out.push_back(std::move(p));
  };
  auto recurse = [&](auto&& self, int i, int max_label) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      rgs[i] = label;
      self(self, i + 1, std::max(max_label, label));
    }
  };
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  rgs[0] = 0;
  recurse(recurse, 1, 0);
  return out;
}

/// P_n ordered by refinement, nodes in all_partitions(n) order.
inline AbstractPoset partition_lattice(int n) {
  const auto parts = all_partitions(n);
  return AbstractPoset::from_relation(parts.size(), [&](Node i, Node j) { return refines(parts[i], parts[j]); });
}

/// Atom elements of B, ascending.
inline std::vector<int> boolean_atoms(const FiniteOrtholattice& B) { return bits_of(B.atoms()); }

namespace detail {

// Bit i set when atom position i lies below a.
inline Mask atom_signature(const FiniteOrtholattice& B, const std::vector<int>& atoms, int a) {
  Mask s = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (B.leq(atoms[i], a)) s |= bit(static_cast<int>(i));
  }
  return s;
}

}  // namespace detail

inline Partition subalgebra_to_partition(const FiniteOrtholattice& B, Mask x) {
  require_boolean(B);
  const std::vector<int> atoms = boolean_atoms(B);
  Partition p;
  for_each_bit(x, [&](int a) {
    if (a == B.bottom()) return;
    // minimal nonzero members of x
    if ((B.down_set(a) & x & ~bit(a)) != bit(B.bottom())) return;
    p.blocks.push_back(bits_of(detail::atom_signature(B, atoms, a)));
  });
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

inline Mask partition_to_subalgebra(const FiniteOrtholattice& B, const Partition& p) {
  require_boolean(B);
  const std::vector<int> atoms = boolean_atoms(B);
  std::vector<int> by_signature(std::size_t{1} << atoms.size(), -1);
  for (int a = 0; a < B.size(); ++a) by_signature[detail::atom_signature(B, atoms, a)] = a;
  const std::size_t k = p.blocks.size();
  Mask out = 0;
  for (std::size_t choice = 0; choice < (std::size_t{1} << k); ++choice) {
    Mask sig = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if ((choice >> b) & 1U) {
        for (int a : p.blocks[b]) sig |= bit(a);
      }
    }
    out |= bit(by_signature[sig]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lifting

inline void require_order_iso(const AbstractPoset& P, const AbstractPoset& Q, const std::vector<Node>& phi) {
  if (!is_order_isomorphism(P, Q, phi)) throw Error(ErrorKind::NotAnIso, "node map is not an order isomorphism");
}

/// Every Boolean isomorphism psi: B -> C with psi[x] = phi(x) for all nodes x
/// of Sub(B). One result unless |B| = 4, where both atom assignments qualify.
inline std::vector<Morphism> lift_boolean_iso(const SubalgebraPoset& SubB, const SubalgebraPoset& SubC,
                                              const std::vector<Node>& phi) {
  const FiniteOrtholattice& B = SubB.owner();
  const FiniteOrtholattice& C = SubC.owner();
  require_boolean(B);
  require_boolean(C);
  require_order_iso(SubB.order(), SubC.order(), phi);
  if (B.size() != C.size()) throw Error(ErrorKind::Inconsistent, "Boolean algebras of different sizes");

  auto satisfies = [&](const Morphism& f) {
    if (classify_map(B, C, f.map) != MorphismKind::Iso) return false;
    for (Node x = 0; x < SubB.size(); ++x) {
      if (f.image(SubB.node(x)) != SubC.node(phi[x])) return false;
    }
    return true;
  };
  auto checked = [&](std::vector<Morphism> out) {
    for (const auto& f : out) {
      if (!satisfies(f)) throw Error(ErrorKind::Inconsistent, "lifted map does not induce phi");
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  if (B.size() == 2) return checked({Morphism{{C.bottom(), C.top()}, MorphismKind::Iso}});
  if (B.size() == 4) {
    const std::vector<int> a = boolean_atoms(B);
    const std::vector<int> c = boolean_atoms(C);
    std::vector<Morphism> out;
    for (int swap = 0; swap < 2; ++swap) {
      Morphism f{std::vector<int>(4, 0), MorphismKind::Iso};
      f.map[B.bottom()] = C.bottom();
      f.map[B.top()] = C.top();
      f.map[a[0]] = c[swap];
      f.map[a[1]] = c[1 - swap];
      out.push_back(f);
    }
    return checked(std::move(out));
  }

  const std::vector<bool> pd_c = pd_order_flags(SubC.order());
  const Mask coatoms_c = C.coatoms() | bit(C.top());
  const Mask outside_b0 = B.coatoms() | bit(B.top());
  std::vector<int> map(static_cast<std::size_t>(B.size()), -1);
  for (int b = 0; b < B.size(); ++b) {
    if (has(outside_b0, b)) continue;
    const Node image = phi[SubB.index_of(principal_dual_subalgebra(B, b))];
    if (!pd_c[image]) throw Error(ErrorKind::Inconsistent, "image of a principal dual node is not principal dual");
    const Mask y = SubC.node(image);
    int c = C.bottom();
    for_each_bit(y, [&](int d) {
      if (is_subset(C.down_set(d), y)) c = C.join(c, d);
    });
    if (has(coatoms_c, c) || principal_dual_subalgebra(C, c) != y) {
      throw Error(ErrorKind::Inconsistent, "cannot read off the image element");
    }
    map[b] = c;
  }
  for (int b = 0; b < B.size(); ++b) {
    if (has(outside_b0, b)) map[b] = C.ocomp(map[B.ocomp(b)]);
  }
  return checked({Morphism{map, MorphismKind::Iso}});
}

}  // namespace omlkit
