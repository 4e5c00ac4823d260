#pragma once

// Shared generators and brute-force oracles for the unit suites. Oracles here
// deliberately avoid the library's own closure and search routines.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "omlkit/omlkit.hpp"

namespace testing_support {

using namespace omlkit;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

/// Random permutation of 0..n-1 fixing 0 and n-1.
inline std::vector<int> bound_fixing_perm(int n, std::mt19937& gen) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  if (n > 2) std::shuffle(perm.begin() + 1, perm.end() - 1, gen);
  return perm;
}

/// Small OMLs: catalog members and horizontal sums of Boolean pieces, each
/// randomly relabeled.
inline FiniteOrtholattice random_oml(std::mt19937& gen) {
  static const std::vector<std::string> pool = {
      "2^1", "2^2", "2^3", "MO2", "MO3", "MO4", "MO2x2", "example22",
      "hsum(2^3,2^3)", "hsum(2^2,2^3)", "hsum(2^3,2^2,2^2)", "hsum(2^4,2^2)", "hsum(2^3,2^3,2^3)"};
  const auto& name = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(gen)];
  const FiniteOrtholattice L = catalog(name);
  return relabeled(L, bound_fixing_perm(L.size(), gen));
}

/// x <= y read straight off the stored relation.
inline bool le(const FiniteOrtholattice& L, int x, int y) { return has(L.up_set(x), y); }

/// Join by scanning for the least upper bound.
inline int slow_join(const FiniteOrtholattice& L, int a, int b) {
  for (int c = 0; c < L.size(); ++c) {
    if (!le(L, a, c) || !le(L, b, c)) continue;
    bool least = true;
    for (int d = 0; d < L.size(); ++d) {
      if (le(L, a, d) && le(L, b, d) && !le(L, c, d)) least = false;
    }
    if (least) return c;
  }
  return -1;
}

inline int slow_meet(const FiniteOrtholattice& L, int a, int b) {
  for (int c = 0; c < L.size(); ++c) {
    if (!le(L, c, a) || !le(L, c, b)) continue;
    bool greatest = true;
    for (int d = 0; d < L.size(); ++d) {
      if (le(L, d, a) && le(L, d, b) && !le(L, d, c)) greatest = false;
    }
    if (greatest) return c;
  }
  return -1;
}

/// Closed under complement and binary joins (hence meets) and holds the bounds.
inline bool closed(const FiniteOrtholattice& L, Mask s) {
  if (!has(s, 0) || !has(s, L.size() - 1)) return false;
  for (int a = 0; a < L.size(); ++a) {
    if (!has(s, a)) continue;
    if (!has(s, L.ocomp(a))) return false;
    for (int b = 0; b < L.size(); ++b) {
      if (has(s, b) && !has(s, slow_join(L, a, b))) return false;
    }
  }
  return true;
}

/// Distributive over every triple of members.
inline bool distributive(const FiniteOrtholattice& L, Mask s) {
  const auto m = bits_of(s);
  for (int a : m) {
    for (int b : m) {
      for (int c : m) {
        if (slow_meet(L, a, slow_join(L, b, c)) != slow_join(L, slow_meet(L, a, b), slow_meet(L, a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Every subalgebra (or Boolean subalgebra) by exhausting subsets of the
/// inner elements. Only for lattices with at most 20 elements.
inline std::vector<Mask> brute_subalgebras(const FiniteOrtholattice& L, bool boolean_only) {
  const int inner = L.size() - 2;
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << inner); ++m) {
    const Mask s = (m << 1) | 1 | bit(L.size() - 1);
    if (closed(L, s) && (!boolean_only || distributive(L, s))) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Maps that preserve bounds, complement and joins, found by exhausting all
/// functions. Only for tiny lattices.
inline std::vector<std::vector<int>> brute_homs(const FiniteOrtholattice& L, const FiniteOrtholattice& M) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(static_cast<std::size_t>(L.size()), 0);
  auto ok = [&] {
    if (map[0] != 0 || map[L.size() - 1] != M.size() - 1) return false;
    for (int a = 0; a < L.size(); ++a) {
      if (map[L.ocomp(a)] != M.ocomp(map[a])) return false;
      for (int b = 0; b < L.size(); ++b) {
        if (map[slow_join(L, a, b)] != slow_join(M, map[a], map[b])) return false;
      }
    }
    return true;
  };
  for (;;) {
    if (ok()) out.push_back(map);
    int i = 0;
    while (i < L.size() && ++map[i] == M.size()) map[i++] = 0;
    if (i == L.size()) break;
  }
  return out;
}

/// Lattice automorphisms by trying every permutation of the inner elements.
inline std::vector<std::vector<int>> brute_automorphisms(const FiniteOrtholattice& L) {
  std::vector<int> perm(static_cast<std::size_t>(L.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < L.size() && ok; ++a) {
      if (perm[L.ocomp(a)] != L.ocomp(perm[a])) ok = false;
      for (int b = 0; b < L.size() && ok; ++b) {
        if (le(L, a, b) != le(L, perm[a], perm[b])) ok = false;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return out;
}

/// Node map Sub(L) -> Sub(M) induced by an element map.
inline std::vector<Node> induced(const SubalgebraPoset& P, const SubalgebraPoset& Q, const std::vector<int>& map) {
  std::vector<Node> out(P.size());
  for (Node x = 0; x < P.size(); ++x) {
    Mask img = 0;
    for (int a : bits_of(P.node(x))) img |= bit(map[a]);
    out[x] = Q.index_of(img);
  }
  return out;
}

inline std::set<std::vector<int>> maps_of(const std::vector<Morphism>& fs) {
  std::set<std::vector<int>> out;
  for (const auto& f : fs) out.insert(f.map);
  return out;
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected an omlkit::Error");
}

}  // namespace testing_support
