#pragma once

// Rebuilding a finite OML from a bare poset known to be isomorphic to its
// poset of Boolean subalgebras. Atoms of the poset that stand for atoms of
// the lattice are picked out by an order condition, the orthogonality frame
// on those atoms is read off from which joins exist, and the lattice comes
// back as the orthoclosed subsets of the frame.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "omlkit/lattice.hpp"
#include "omlkit/poset.hpp"

namespace omlkit {

inline constexpr int kMaxFramePoints = 20;

struct AtomClasses {
  std::vector<Node> u;  // satisfy the condition, not maximal
  std::vector<Node> v;  // satisfy the condition, maximal
};

/// An atom x qualifies when, for every atom y whose join with x exists,
/// that join has height at most 2.
inline AtomClasses classify_atoms(const AbstractPoset& P) {
  const std::vector<Node> atoms = poset_atoms(P);
  AtomClasses out;
  for (Node x : atoms) {
    bool ok = true;
    for (Node y : atoms) {
      const auto j = poset_join(P, x, y);
      if (j && P.rank(*j) > 2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    (is_maximal(P, x) ? out.v : out.u).push_back(x);
  }
  return out;
}

/// Points with a symmetric irreflexive orthogonality relation.
struct OrthoFrame {
  struct Point {
    Node origin;  // poset atom the point came from
    int copy;     // 0 for U-points, 1 or 2 for the two points made from a V-atom
  };
  std::vector<Point> points;
  std::vector<Mask> perp;  // perp[i] has bit j when i is orthogonal to j

  int size() const { return static_cast<int>(points.size()); }
  bool orthogonal(int i, int j) const { return has(perp[i], j); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i) {
      for_each_bit(perp[i], [&](int j) {
        if (i < j) out.emplace_back(i, j);
      });
    }
    return out;
  }
};

inline OrthoFrame build_frame(const AbstractPoset& P, const AtomClasses& classes) {
  const std::size_t total = classes.u.size() + 2 * classes.v.size();
  if (total > 64) throw Error(ErrorKind::FrameCap, "frame has more than 64 points");
  OrthoFrame frame;
  for (Node u : classes.u) frame.points.push_back({u, 0});
  for (Node v : classes.v) {
    frame.points.push_back({v, 1});
    frame.points.push_back({v, 2});
  }
  frame.perp.assign(total, 0);
  const int nu = static_cast<int>(classes.u.size());
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nu; ++j) {
      if (i != j && poset_join(P, classes.u[i], classes.u[j])) frame.perp[i] |= bit(j);
    }
  }
  for (int k = nu; k < static_cast<int>(total); k += 2) {
    frame.perp[k] |= bit(k + 1);
    frame.perp[k + 1] |= bit(k);
  }
  return frame;
}

namespace detail {

inline Mask perp_of(const OrthoFrame& frame, Mask s) {
  Mask out = low_bits(frame.size());
  for_each_bit(s, [&](int b) { out &= frame.perp[b]; });
  return out;
}

}  // namespace detail

/// The sets S with S = S^perp^perp, ordered by inclusion, with S -> S^perp as
/// orthocomplement. Elements are indexed by ascending bit mask.
inline FiniteOrtholattice orthoclosed_lattice(const OrthoFrame& frame, std::string name = {}) {
  const int k = frame.size();
  if (k > kMaxFramePoints) throw Error(ErrorKind::FrameCap, "frame has more than 20 points");
  for (int i = 0; i < k; ++i) {
    if (frame.orthogonal(i, i)) throw Error(ErrorKind::MalformedInput, "frame point orthogonal to itself");
    for (int j = 0; j < k; ++j) {
      if (frame.orthogonal(i, j) != frame.orthogonal(j, i)) {
        throw Error(ErrorKind::MalformedInput, "frame orthogonality is not symmetric");
      }
    }
  }
  std::vector<Mask> closed;
  const Mask limit = Mask{1} << k;
  for (Mask s = 0; s < limit; ++s) {
    if (detail::perp_of(frame, detail::perp_of(frame, s)) == s) {
      closed.push_back(s);
      if (closed.size() > static_cast<std::size_t>(kMaxElements)) {
        throw Error(ErrorKind::SizeCap, "orthoclosed family exceeds 64 elements");
      }
    }
  }
  const int n = static_cast<int>(closed.size());
  auto index_of = [&](Mask s) {
    return static_cast<int>(std::lower_bound(closed.begin(), closed.end(), s) - closed.begin());
  };
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  std::vector<int> ortho(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (is_subset(closed[i], closed[j])) up[i] |= bit(j);
    }
    ortho[i] = index_of(detail::perp_of(frame, closed[i]));
  }
  return FiniteOrtholattice::from_up_sets(std::move(up), std::move(ortho), std::move(name));
}

struct Reconstruction {
  FiniteOrtholattice lattice;
  OrthoFrame frame;
};

/// Full pipeline, also returning the intermediate frame.
inline Reconstruction reconstruct_with_frame(const AbstractPoset& P) {
  require_least(P);
  if (P.size() == 1) {
    return {FiniteOrtholattice::from_up_sets({0b11, 0b10}, {1, 0}, "reconstructed"), OrthoFrame{}};
  }
  OrthoFrame frame = build_frame(P, classify_atoms(P));
  try {
    FiniteOrtholattice L = orthoclosed_lattice(frame, "reconstructed");
    if (!L.is_orthomodular()) {
      throw Error(ErrorKind::MalformedInput, "result is not orthomodular; input is not a BSub poset");
    }
    return {std::move(L), std::move(frame)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedInput || e.kind() == ErrorKind::FrameCap ||
        e.kind() == ErrorKind::SizeCap) {
      throw;
    }
    throw Error(ErrorKind::MalformedInput, std::string("reconstruction failed: ") + e.what());
  }
}

inline FiniteOrtholattice reconstruct(const AbstractPoset& P) { return reconstruct_with_frame(P).lattice; }

}  // namespace omlkit
