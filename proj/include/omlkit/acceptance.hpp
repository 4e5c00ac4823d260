#pragma once

// Acceptance criteria, shared by the acceptance test binary and the
// `omlkit selftest` command. Each criterion computes its expectations with an
// oracle that does not go through the code path it checks.

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "omlkit/catalog.hpp"
#include "omlkit/functorial.hpp"
#include "omlkit/iso_lifting.hpp"
#include "omlkit/lattice.hpp"
#include "omlkit/poset.hpp"
#include "omlkit/reconstruction.hpp"
#include "omlkit/sachs.hpp"
#include "omlkit/subalgebras.hpp"

namespace omlkit::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace oracle {

/// Bell numbers from the Bell triangle.
inline std::vector<long long> bell_numbers(int count) {
  std::vector<long long> out{1};
  std::vector<long long> row{1};
  while (static_cast<int>(out.size()) < count) {
    std::vector<long long> next{row.back()};
    for (long long v : row) next.push_back(next.back() + v);
    row = next;
    out.push_back(row.front());
  }
  return out;
}

/// Order automorphisms by trying every permutation of the nodes.
inline std::vector<std::vector<Node>> order_automorphisms(const AbstractPoset& P) {
  std::vector<Node> perm(P.size());
  std::iota(perm.begin(), perm.end(), Node{0});
  std::vector<std::vector<Node>> out;
  do {
    if (is_order_isomorphism(P, P, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// The automorphism of 2^n permuting atom positions: mask i -> permuted mask.
inline Morphism atom_permutation(int n, const std::vector<int>& perm) {
  Morphism f{std::vector<int>(std::size_t{1} << n), MorphismKind::Iso};
  for (int m = 0; m < (1 << n); ++m) {
    int image = 0;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1) image |= 1 << perm[i];
    }
    f.map[m] = image;
  }
  return f;
}

/// Node map x -> psi[x].
inline std::vector<Node> induced_node_map(const SubalgebraPoset& P, const SubalgebraPoset& Q, const Morphism& psi) {
  std::vector<Node> out(P.size());
  for (Node x = 0; x < P.size(); ++x) out[x] = Q.index_of(psi.image(P.node(x)));
  return out;
}

/// Direct principal dual test: x = [0,a] u [a',1] for some element a.
inline bool is_principal_dual(const FiniteOrtholattice& B, Mask x) {
  for (int a = 0; a < B.size(); ++a) {
    if ((B.down_set(a) | B.up_set(B.ocomp(a))) == x) return true;
  }
  return false;
}

}  // namespace oracle

namespace detail {

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "FAILED: " << what << "; ";
    }
  }
};

}  // namespace detail

inline CriterionResult example22_shape() {
  detail::Check c;
  const auto L = example22();
  const auto P = bsub(L);
  const auto& O = P.order();
  const auto atoms = poset_atoms(O);
  const auto maximal = poset_maximal(O);
  c.expect(P.size() == 8, "8 nodes");
  c.expect(P.node(*O.least()) == (bit(0) | bit(11)), "bottom is {0,1}");
  c.expect(atoms.size() == 5, "5 atoms");
  c.expect(maximal.size() == 2, "2 maximal nodes");
  if (maximal.size() == 2) {
    c.expect(popcount(P.node(maximal[0])) == 8 && popcount(P.node(maximal[1])) == 8, "maximal nodes have 8 elements");
    const auto m = poset_meet(O, maximal[0], maximal[1]);
    // c = 3, c' = 8
    c.expect(m && P.node(*m) == (bit(0) | bit(3) | bit(8) | bit(11)), "blocks meet in {0,c,c',1}");
    c.expect(m && std::find(atoms.begin(), atoms.end(), *m) != atoms.end(), "that meet is an atom");
  }
  c.notes << P.size() << " nodes, " << atoms.size() << " atoms, " << maximal.size() << " maximal";
  return {1, "BSub(example22): bottom, 5 atoms, 2 eight-element blocks over {0,c,c',1}", c.ok, c.notes.str()};
}

inline CriterionResult reconstruction_round_trip() {
  detail::Check c;
  const std::vector<std::string> names = {"2^2", "2^3",   "2^4",       "MO2",          "MO3",
                                          "MO4", "MO2x2", "example22", "hsum(2^3,2^3)"};
  int passed = 0;
  for (const auto& name : names) {
    const auto L = catalog(name);
    const auto R = reconstruct(bsub(L).order());
    const bool ok = find_isomorphism(R, L).has_value();
    c.expect(ok, "reconstruct(BSub(" + name + ")) ~ " + name);
    passed += ok ? 1 : 0;
  }
  c.notes << passed << "/" << names.size() << " round trips";
  return {2, "reconstruction from BSub recovers L up to isomorphism", c.ok, c.notes.str()};
}

inline CriterionResult sachs_characterizations() {
  detail::Check c;
  int checked = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto B = boolean_algebra(n);
    const auto S = sub(B);
    const auto pd = pd_order_flags(S.order());
    for (Node x = 0; x < S.size(); ++x) {
      const bool dual = dual_decomposition(B, S.node(x)).has_value();
      c.expect(dual_order_test(S, x) == dual, "dual test agrees on node " + std::to_string(x) + " of Sub(2^" +
                                                  std::to_string(n) + ")");
      c.expect(pd[x] == oracle::is_principal_dual(B, S.node(x)),
               "p.d. test agrees on node " + std::to_string(x) + " of Sub(2^" + std::to_string(n) + ")");
      ++checked;
    }
  }
  const auto B4 = boolean_algebra(4);
  const auto S4 = sub(B4);
  const Mask witness = bit(0) | bit(0b0011) | bit(0b1100) | bit(0b1111);
  const Node w = S4.index_of(witness);
  c.expect(!dual_order_test(S4, w) && !dual_decomposition(B4, witness), "{0,12,34,1} is not dual");
  c.expect(!pd_order_test(S4, w) && !oracle::is_principal_dual(B4, witness), "{0,12,34,1} is not p.d.");
  c.notes << checked << " subalgebras checked";
  return {3, "order tests for dual and principal dual subalgebras match direct definitions", c.ok, c.notes.str()};
}

inline CriterionResult exchange_symmetry() {
  detail::Check c;
  long long cases = 0;
  long long violations = 0;
  for (int n : {3, 4}) {
    const auto B = boolean_algebra(n);
    for (Mask x : subalgebra_masks(B, false)) {
      if (!dual_decomposition(B, x)) continue;
      for (int a = 0; a < B.size(); ++a) {
        if (has(x, a)) continue;
        const Mask xa = generated_subalgebra(B, x | bit(a));
        for (int b = 0; b < B.size(); ++b) {
          if (has(x, b)) continue;
          const Mask xb = generated_subalgebra(B, x | bit(b));
          ++cases;
          if (has(xa, b) != has(xb, a)) ++violations;
        }
      }
    }
  }
  c.expect(violations == 0, std::to_string(violations) + " violations");
  c.notes << cases << " (x,a,b) cases, " << violations << " violations";
  return {4, "exchange symmetry b in <x,a> iff a in <x,b> for dual x", c.ok, c.notes.str()};
}

inline CriterionResult boolean_lifting() {
  detail::Check c;
  const auto B = boolean_algebra(3);
  const auto S = sub(B);
  const auto autos = oracle::order_automorphisms(S.order());
  c.expect(autos.size() == 6, "Sub(2^3) has 6 automorphisms (found " + std::to_string(autos.size()) + ")");
  std::vector<std::vector<Node>> induced;
  std::vector<int> perm = {0, 1, 2};
  do {
    const Morphism psi = oracle::atom_permutation(3, perm);
    const auto phi = oracle::induced_node_map(S, S, psi);
    induced.push_back(phi);
    const auto lifts = lift_boolean_iso(S, S, phi);
    c.expect(lifts.size() == 1 && lifts.front().map == psi.map, "unique lift recovers the atom permutation");
    for (const auto& f : lifts) {
      for (Node x = 0; x < S.size(); ++x) c.expect(f.image(S.node(x)) == S.node(phi[x]), "psi[x] = phi(x)");
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(induced.begin(), induced.end());
  auto sorted_autos = autos;
  std::sort(sorted_autos.begin(), sorted_autos.end());
  c.expect(induced == sorted_autos, "every Sub(2^3) automorphism is induced by an atom permutation");

  const auto B2 = boolean_algebra(2);
  const auto S2 = sub(B2);
  const auto two = lift_boolean_iso(S2, S2, {0, 1});
  c.expect(two.size() == 2, "identity on Sub(2^2) lifts twice");
  c.notes << autos.size() << " automorphisms of Sub(2^3) lifted; " << two.size() << " lifts on Sub(2^2)";
  return {5, "Boolean lifting: Sub(2^3) automorphisms lift uniquely, Sub(2^2) identity lifts twice", c.ok,
          c.notes.str()};
}

inline CriterionResult atom_counts() {
  detail::Check c;
  const auto mo2 = poset_atoms(sub(mo(2)).order()).size();
  const auto mo2x2 = poset_atoms(sub(catalog("MO2x2")).order()).size();
  c.expect(mo2 == 2, "Sub(MO2) has 2 atoms");
  c.expect(mo2x2 == 5, "Sub(MO2x2) has 5 atoms");
  c.notes << "Sub(MO2): " << mo2 << ", Sub(MO2x2): " << mo2x2;
  for (int n = 2; n <= 4; ++n) {
    const auto count = poset_atoms(sub(boolean_algebra(n)).order()).size();
    const std::size_t expected = (std::size_t{1} << (n - 1)) - 1;
    c.expect(count == expected, "Sub(2^" + std::to_string(n) + ") atoms");
    c.notes << ", Sub(2^" << n << "): " << count;
  }
  return {6, "atom counts of subalgebra lattices", c.ok, c.notes.str()};
}

inline CriterionResult partition_duality() {
  detail::Check c;
  const auto bell = oracle::bell_numbers(6);
  for (int n = 2; n <= 4; ++n) {
    const auto B = boolean_algebra(n);
    const auto S = sub(B);
    const auto parts = all_partitions(n);
    const auto Pn = partition_lattice(n);
    c.expect(static_cast<long long>(S.size()) == bell[n], "|Sub(2^" + std::to_string(n) + ")| = Bell(n)");
    // explicit map: subalgebra -> its atom partition
    std::vector<Node> to_part(S.size());
    bool bijective = S.size() == parts.size();
    std::vector<bool> hit(parts.size(), false);
    for (Node x = 0; x < S.size() && bijective; ++x) {
      const auto p = subalgebra_to_partition(B, S.node(x));
      const auto it = std::find(parts.begin(), parts.end(), p);
      if (it == parts.end() || hit[it - parts.begin()]) {
        bijective = false;
        break;
      }
      to_part[x] = static_cast<Node>(it - parts.begin());
      hit[to_part[x]] = true;
      c.expect(partition_to_subalgebra(B, p) == S.node(x), "partition round trip");
    }
    c.expect(bijective, "subalgebra -> partition is a bijection");
    if (bijective) {
      for (Node x = 0; x < S.size(); ++x) {
        for (Node y = 0; y < S.size(); ++y) {
          c.expect(S.order().leq(x, y) == Pn.leq(to_part[y], to_part[x]), "map reverses order");
        }
      }
    }
    const auto witness = poset_isomorphic(S.order(), Pn.dual());
    c.expect(witness && is_order_isomorphism(S.order(), Pn.dual(), *witness), "dual isomorphism witness");
    c.notes << "n=" << n << ": " << S.size() << " nodes; ";
  }
  return {7, "Sub(2^n) is dually isomorphic to the partition lattice, |Sub(2^n)| = Bell(n)", c.ok, c.notes.str()};
}

inline CriterionResult oml_lifting() {
  detail::Check c;
  for (const std::string name : {"2^3", "2^4", "MO2x2", "example22", "hsum(2^3,2^3)"}) {
    const auto L = catalog(name);
    const auto P = bsub(L);
    const auto homs = enumerate_homs(L, L);
    const auto autos = automorphisms(L);
    for (const auto& psi : autos) {
      const auto phi = oracle::induced_node_map(P, P, psi);
      const auto lifts = lift_bsub_iso(P, P, phi);
      c.expect(lifts.size() == 1 && lifts.front().map == psi.map, name + ": lift returns exactly [psi]");
      std::vector<Morphism> inducing;
      for (const auto& g : homs) {
        bool same = true;
        for (Node y = 0; y < P.size() && same; ++y) same = g.image(P.node(y)) == P.node(phi[y]);
        if (same) inducing.push_back(g);
      }
      c.expect(inducing.size() == 1 && inducing.front().map == psi.map, name + ": psi is the only inducing hom");
    }
    c.notes << name << ": " << autos.size() << " automorphisms; ";
  }
  const auto mo2 = bsub(mo(2));
  std::vector<Node> id(mo2.size());
  std::iota(id.begin(), id.end(), Node{0});
  const auto lifts = lift_bsub_iso(mo2, mo2, id);
  c.expect(lifts.size() == 4, "identity on BSub(MO2) lifts 4 ways");
  c.notes << "MO2 identity: " << lifts.size() << " lifts";
  return {8, "BSub isomorphisms lift to OML isomorphisms (unique without 4-element blocks)", c.ok, c.notes.str()};
}

inline CriterionResult benzene_counterexample() {
  detail::Check c;
  const auto benz = benzene();
  const auto m = mo(2);
  c.expect(poset_isomorphic(bsub(benz).order(), bsub(m).order()).has_value(), "BSub(benzene) ~ BSub(MO2)");
  c.expect(poset_isomorphic(sub(benz).order(), sub(m).order()).has_value(), "Sub(benzene) ~ Sub(MO2)");
  c.expect(!find_isomorphism(benz, m).has_value(), "benzene is not isomorphic to MO2");
  c.expect(!benz.is_orthomodular(), "benzene fails orthomodularity");
  c.notes << "BSub sizes " << bsub(benz).size() << "/" << bsub(m).size() << ", Sub sizes " << sub(benz).size() << "/"
          << sub(m).size();
  return {9, "benzene ring: same Sub and BSub as MO2, yet not isomorphic and not orthomodular", c.ok, c.notes.str()};
}

inline CriterionResult functor_suite() {
  detail::Check c;
  const auto w = nonfull_witness();
  c.expect(w.meets_preserved, "collapsing map preserves meets");
  c.expect(!w.realized_by_hom, "collapsing map is not a preimage map");
  c.expect(w.chain_unrealized, "3-chain is not a catalog Sub(L)");
  c.expect(w.swap_matches_identity, "alpha^-1 = id^-1 on Sub(2^2)");

  const auto m = mo(2);
  const auto four = classify_recovery(m, m, identity_morphism(m));
  c.expect(four.kind == RecoveryClass::FourBlockImage && four.witness && four.verified &&
               four.witness->map != identity_morphism(m).map,
           "identity on MO2 is FourBlockImage with a distinct witness");
  const auto b3 = boolean_algebra(3);
  const auto det = classify_recovery(b3, b3, identity_morphism(b3));
  c.expect(det.kind == RecoveryClass::Determined && det.verified, "identity on 2^3 is Determined and unique");

  const auto homs = enumerate_homs(b3, b3);
  const auto s = sub(b3);
  std::vector<PreimageMap> pre;
  for (const auto& f : homs) pre.push_back(preimage_functor(f, s, s));
  long long pairs = 0;
  long long violations = 0;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    for (std::size_t j = 0; j < homs.size(); ++j) {
      const auto gf = preimage_functor(compose(homs[j], homs[i]), s, s);
      for (Node x = 0; x < s.size(); ++x) {
        if (gf.map[x] != pre[i].map[pre[j].map[x]]) ++violations;
      }
      ++pairs;
    }
  }
  c.expect(violations == 0, "(g.f)^-1 = f^-1 . g^-1");
  c.notes << homs.size() << " homs on 2^3, " << pairs << " composable pairs, " << violations << " violations";
  return {10, "preimage functor: non-full witness, non-faithful swap, recovery trichotomy, functoriality", c.ok,
          c.notes.str()};
}

inline std::vector<std::function<CriterionResult()>> criteria() {
  return {example22_shape, reconstruction_round_trip, sachs_characterizations, exchange_symmetry,
          boolean_lifting, atom_counts,               partition_duality,       oml_lifting,
          benzene_counterexample, functor_suite};
}

/// Runs every criterion, printing one PASS/FAIL line each. Exceptions count as failures.
inline bool run_all(std::ostream& os, std::vector<CriterionResult>* results = nullptr) {
  bool all = true;
  int index = 0;
  for (const auto& criterion : criteria()) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = criterion();
    } catch (const std::exception& e) {
      r = {index, "criterion " + std::to_string(index), false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && r.passed;
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " -- " << r.detail << " ("
       << static_cast<int>(r.seconds * 1000) << " ms)\n";
    if (results) results->push_back(r);
  }
  os << (all ? "all acceptance criteria passed\n" : "some acceptance criteria FAILED\n");
  return all;
}

}  // namespace omlkit::acceptance
