#pragma once

// Constructors for the named lattices used throughout the toolkit.

#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "omlkit/lattice.hpp"

namespace omlkit {

/// The Boolean algebra 2^n; element i is the subset of atoms with bit mask i.
inline FiniteOrtholattice boolean_algebra(int n) {
  if (n < 1) throw Error(ErrorKind::UnknownName, "2^n needs n >= 1");
  if (n > 6) throw Error(ErrorKind::SizeCap, "2^" + std::to_string(n) + " exceeds 64 elements");
  const int size = 1 << n;
  std::vector<Mask> up(static_cast<std::size_t>(size), 0);
  std::vector<int> ortho(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if ((i & ~j) == 0) up[i] |= bit(j);
    }
    ortho[i] = (size - 1) ^ i;
  }
  return FiniteOrtholattice::from_up_sets(std::move(up), std::move(ortho), "2^" + std::to_string(n));
}

/// Identifies the bounds of the summands. Element order: 0, the inner
/// elements of each summand in turn, 1.
inline FiniteOrtholattice horizontal_sum(const std::vector<FiniteOrtholattice>& parts, std::string name = {}) {
  int size = 2;
  for (const auto& p : parts) size += p.size() - 2;
  if (size > kMaxElements) throw Error(ErrorKind::SizeCap, "horizontal sum exceeds 64 elements");
  std::vector<Mask> up(static_cast<std::size_t>(size), 0);
  std::vector<int> ortho(static_cast<std::size_t>(size), 0);
  const int top = size - 1;
  up[0] = low_bits(size);
  up[top] = bit(top);
  ortho[0] = top;
  ortho[top] = 0;
  int offset = 1;
  for (const auto& p : parts) {
    auto global = [&](int a) { return a == p.bottom() ? 0 : a == p.top() ? top : offset + a - 1; };
    for (int a = 1; a < p.top(); ++a) {
      for_each_bit(p.up_set(a), [&](int b) { up[global(a)] |= bit(global(b)); });
      ortho[global(a)] = global(p.ocomp(a));
    }
    offset += p.size() - 2;
  }
  return FiniteOrtholattice::from_up_sets(std::move(up), std::move(ortho), std::move(name));
}

/// MO_k: k pairs of orthogonal atoms glued at 0 and 1.
inline FiniteOrtholattice mo(int k) {
  if (k < 1) throw Error(ErrorKind::UnknownName, "MOk needs k >= 1");
  std::vector<FiniteOrtholattice> parts(static_cast<std::size_t>(k), boolean_algebra(2));
  return horizontal_sum(parts, "MO" + std::to_string(k));
}

/// Direct product; element (i, j) has index i * |B| + j.
inline FiniteOrtholattice product(const FiniteOrtholattice& A, const FiniteOrtholattice& B, std::string name = {}) {
  const int size = A.size() * B.size();
  if (size > kMaxElements) throw Error(ErrorKind::SizeCap, "product exceeds 64 elements");
  const int m = B.size();
  std::vector<Mask> up(static_cast<std::size_t>(size), 0);
  std::vector<int> ortho(static_cast<std::size_t>(size), 0);
  for (int i = 0; i < A.size(); ++i) {
    for (int j = 0; j < m; ++j) {
      for_each_bit(A.up_set(i), [&](int k) {
        for_each_bit(B.up_set(j), [&](int l) { up[i * m + j] |= bit(k * m + l); });
      });
      ortho[i * m + j] = A.ocomp(i) * m + B.ocomp(j);
    }
  }
  return FiniteOrtholattice::from_up_sets(std::move(up), std::move(ortho), std::move(name));
}

/// Two 8-element blocks {a,b,c} and {c,d,e} pasted along {0,c,c',1}.
/// Indices: 0, a..e = 1..5, a'..e' = 6..10, 1 = 11.
inline FiniteOrtholattice example22() {
  enum { A = 1, B, C, D, E, Ac, Bc, Cc, Dc, Ec, One };
  std::vector<std::pair<int, int>> covers;
  for (int atom = A; atom <= E; ++atom) covers.emplace_back(0, atom);
  for (int coatom = Ac; coatom <= Ec; ++coatom) covers.emplace_back(coatom, One);
  const std::vector<std::pair<int, int>> middle = {{A, Bc}, {A, Cc}, {B, Ac}, {B, Cc}, {C, Ac}, {C, Bc},
                                                   {C, Dc}, {C, Ec}, {D, Cc}, {D, Ec}, {E, Cc}, {E, Dc}};
  covers.insert(covers.end(), middle.begin(), middle.end());
  std::vector<int> ortho = {One, Ac, Bc, Cc, Dc, Ec, A, B, C, D, E, 0};
  return from_covers(12, covers, std::move(ortho), "example22");
}

/// The hexagon 0 < x < y < 1, 0 < y' < x' < 1. Indices: 0, x, y, y', x', 1.
inline FiniteOrtholattice benzene() {
  const std::vector<std::pair<int, int>> covers = {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
  return from_covers(6, covers, {5, 4, 3, 2, 1, 0}, "benzene");
}

/// Same lattice with element a moved to index perm[a]. perm must fix 0 and n-1.
inline FiniteOrtholattice relabeled(const FiniteOrtholattice& L, const std::vector<int>& perm) {
  const int n = L.size();
  if (static_cast<int>(perm.size()) != n || perm[0] != 0 || perm[n - 1] != n - 1) {
    throw Error(ErrorKind::MalformedInput, "relabeling must fix the bounds");
  }
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  std::vector<int> ortho(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for_each_bit(L.up_set(a), [&](int b) { up[perm[a]] |= bit(perm[b]); });
    ortho[perm[a]] = perm[L.ocomp(a)];
  }
  return FiniteOrtholattice::from_up_sets(std::move(up), std::move(ortho), L.name());
}

/// Looks up a lattice by name: `2^n` (or `B2^n`), `MOk`, `MO2x2`, `example22`,
/// `benzene`, or `hsum(X,Y,...)` over any of these.
inline FiniteOrtholattice catalog(const std::string& raw_name) {
  std::string name;
  for (char ch : raw_name) {
    if (ch != ' ') name.push_back(ch);
  }
  static const std::regex boolean_re(R"(B?2\^(\d+))");
  static const std::regex mo_re(R"(MO(\d+))");
  static const std::regex hsum_re(R"(hsum\((.*)\))");
  std::smatch m;
  if (std::regex_match(name, m, boolean_re)) {
    const int n = std::stoi(m[1].str());
    if (n > 6) throw Error(ErrorKind::SizeCap, name + " exceeds 64 elements");
    return boolean_algebra(n).with_name(name);
  }
  if (name == "MO2x2") return product(mo(2), boolean_algebra(1), "MO2x2");
  if (std::regex_match(name, m, mo_re)) {
    const int k = std::stoi(m[1].str());
    if (2 * k + 2 > kMaxElements) throw Error(ErrorKind::SizeCap, name + " exceeds 64 elements");
    return mo(k);
  }
  if (name == "example22") return example22();
  if (name == "benzene") return benzene();
  if (std::regex_match(name, m, hsum_re)) {
    std::vector<FiniteOrtholattice> parts;
    std::string inner = m[1].str();
    int depth = 0;
    std::string current;
    for (char ch : inner + ",") {
      if (ch == ',' && depth == 0) {
        if (current.empty()) throw Error(ErrorKind::UnknownName, "empty summand in " + name);
        parts.push_back(catalog(current));
        current.clear();
        continue;
      }
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      current.push_back(ch);
    }
    for (const auto& p : parts) {
      if (!p.is_orthomodular()) throw Error(ErrorKind::UnknownName, "hsum summands must be orthomodular");
    }
    return horizontal_sum(parts, name);
  }
  throw Error(ErrorKind::UnknownName, "no catalog lattice named '" + raw_name + "'");
}

/// Orthomodular catalog members small enough for exhaustive checks.
inline std::vector<std::string> catalog_oml_names() {
  return {"2^1", "2^2", "2^3", "2^4", "MO2", "MO3", "MO4", "MO2x2", "example22", "hsum(2^3,2^3)"};
}

}  // namespace omlkit
