#pragma once

// Finite partial orders on {0..size-1} with the order-theoretic queries the
// reconstruction and lifting procedures rely on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "omlkit/error.hpp"

namespace omlkit {

using NodeSet = boost::dynamic_bitset<std::uint64_t>;
using Node = std::size_t;

template <typename F>
void for_each_node(const NodeSet& s, F&& f) {
  for (auto i = s.find_first(); i != NodeSet::npos; i = s.find_next(i)) f(static_cast<Node>(i));
}

inline constexpr std::size_t kPosetIsoLimit = 5000;

class AbstractPoset {
 public:
  AbstractPoset() = default;

  /// `leq(i, j)` is queried for every pair; the result must be a partial order.
  template <typename Leq>
  static AbstractPoset from_relation(std::size_t size, Leq&& leq) {
    std::vector<NodeSet> up(size, NodeSet(size));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (leq(i, j)) up[i].set(j);
      }
    }
    return AbstractPoset(std::move(up));
  }

  static AbstractPoset from_pairs(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<NodeSet> up(size, NodeSet(size));
    for (auto [i, j] : pairs) {
      if (i >= size || j >= size) throw Error(ErrorKind::NotAPartialOrder, "pair index out of range");
      up[i].set(j);
    }
    return AbstractPoset(std::move(up));
  }

  /// Takes the full relation as up-sets and checks the partial order axioms.
  explicit AbstractPoset(std::vector<NodeSet> up) : up_(std::move(up)) {
    const std::size_t n = up_.size();
    down_.assign(n, NodeSet(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (up_[i].size() != n) throw Error(ErrorKind::NotAPartialOrder, "relation row has wrong width");
      if (!up_[i].test(i)) throw Error(ErrorKind::NotAPartialOrder, "not reflexive at " + std::to_string(i));
      for_each_node(up_[i], [&](Node j) { down_[j].set(i); });
    }
    for (std::size_t i = 0; i < n; ++i) {
      if ((up_[i] & down_[i]).count() != 1) {
        throw Error(ErrorKind::NotAPartialOrder, "not antisymmetric at " + std::to_string(i));
      }
      bool transitive = true;
      for_each_node(up_[i], [&](Node j) { transitive = transitive && up_[j].is_subset_of(up_[i]); });
      if (!transitive) throw Error(ErrorKind::NotAPartialOrder, "not transitive at " + std::to_string(i));
    }
    build_derived();
  }

  std::size_t size() const noexcept { return up_.size(); }
  bool leq(Node i, Node j) const { return up_[i].test(j); }
  bool less(Node i, Node j) const { return i != j && up_[i].test(j); }
  bool comparable(Node i, Node j) const { return leq(i, j) || leq(j, i); }
  const NodeSet& up_set(Node i) const { return up_[i]; }
  const NodeSet& down_set(Node i) const { return down_[i]; }
  const std::vector<Node>& upper_covers(Node i) const { return covers_up_[i]; }
  const std::vector<Node>& lower_covers(Node i) const { return covers_down_[i]; }
  /// Longest chain ending at i, minus one (equals the height over the least
  /// element when there is one).
  int rank(Node i) const { return heights_[i]; }
  /// Nodes in nondecreasing rank, ties by index.
  const std::vector<Node>& rank_order() const { return rank_order_; }

  std::optional<Node> least() const {
    for (Node i = 0; i < size(); ++i) {
      if (up_[i].all()) return i;
    }
    return std::nullopt;
  }
  std::optional<Node> greatest() const {
    for (Node i = 0; i < size(); ++i) {
      if (down_[i].all()) return i;
    }
    return std::nullopt;
  }

  AbstractPoset dual() const { return AbstractPoset(down_); }

  std::vector<std::pair<Node, Node>> leq_pairs() const {
    std::vector<std::pair<Node, Node>> out;
    for (Node i = 0; i < size(); ++i) for_each_node(up_[i], [&](Node j) { out.emplace_back(i, j); });
    return out;
  }

  friend bool operator==(const AbstractPoset& a, const AbstractPoset& b) { return a.up_ == b.up_; }

 private:
  void build_derived() {
    const std::size_t n = size();
    covers_up_.assign(n, {});
    covers_down_.assign(n, {});
    for (Node i = 0; i < n; ++i) {
      NodeSet strict = up_[i];
      strict.reset(i);
      for_each_node(strict, [&](Node j) {
        NodeSet between = strict & down_[j];
        between.reset(j);
        if (between.none()) {
          covers_up_[i].push_back(j);
          covers_down_[j].push_back(i);
        }
      });
    }
    rank_order_.resize(n);
    for (Node i = 0; i < n; ++i) rank_order_[i] = i;
    std::stable_sort(rank_order_.begin(), rank_order_.end(),
                     [&](Node a, Node b) { return down_[a].count() < down_[b].count(); });
    heights_.assign(n, 0);
    for (Node i : rank_order_) {
      for (Node j : covers_down_[i]) heights_[i] = std::max(heights_[i], heights_[j] + 1);
    }
    std::stable_sort(rank_order_.begin(), rank_order_.end(),
                     [&](Node a, Node b) { return heights_[a] < heights_[b]; });
  }

  std::vector<NodeSet> up_, down_;
  std::vector<std::vector<Node>> covers_up_, covers_down_;
  std::vector<int> heights_;
  std::vector<Node> rank_order_;
};

inline Node require_least(const AbstractPoset& P) {
  auto z = P.least();
  if (!z) throw Error(ErrorKind::NoLeastElement, "poset has no least element");
  return *z;
}

/// Covers of the least element.
inline std::vector<Node> poset_atoms(const AbstractPoset& P) { return P.upper_covers(require_least(P)); }

inline std::vector<Node> poset_maximal(const AbstractPoset& P) {
  std::vector<Node> out;
  for (Node i = 0; i < P.size(); ++i) {
    if (P.up_set(i).count() == 1) out.push_back(i);
  }
  return out;
}

inline bool is_maximal(const AbstractPoset& P, Node x) { return P.up_set(x).count() == 1; }

inline std::vector<Node> poset_covers(const AbstractPoset& P, Node x) { return P.upper_covers(x); }

inline std::optional<Node> poset_join(const AbstractPoset& P, Node x, Node y) {
  const NodeSet upper = P.up_set(x) & P.up_set(y);
  std::optional<Node> out;
  for_each_node(upper, [&](Node z) {
    if (!out && upper.is_subset_of(P.up_set(z))) out = z;
  });
  return out;
}

inline std::optional<Node> poset_meet(const AbstractPoset& P, Node x, Node y) {
  const NodeSet lower = P.down_set(x) & P.down_set(y);
  std::optional<Node> out;
  for_each_node(lower, [&](Node z) {
    if (!out && lower.is_subset_of(P.down_set(z))) out = z;
  });
  return out;
}

/// Length of the longest chain from the least element to x.
inline int height(const AbstractPoset& P, Node x) {
  require_least(P);
  return P.rank(x);
}

/// The principal down-set [0, x] relabeled to 0..k-1 in ascending original order.
struct Interval {
  AbstractPoset poset;
  std::vector<Node> back_map;  // local index -> original node
};

inline Interval interval(const AbstractPoset& P, Node x) {
  require_least(P);
  Interval out;
  for_each_node(P.down_set(x), [&](Node y) { out.back_map.push_back(y); });
  const auto& back = out.back_map;
  out.poset = AbstractPoset::from_relation(back.size(), [&](Node i, Node j) { return P.leq(back[i], back[j]); });
  return out;
}

/// Node `i` of P becomes node `perm[i]`.
inline AbstractPoset relabel(const AbstractPoset& P, const std::vector<Node>& perm) {
  std::vector<Node> inverse(P.size());
  for (Node i = 0; i < P.size(); ++i) inverse[perm[i]] = i;
  return AbstractPoset::from_relation(P.size(), [&](Node i, Node j) { return P.leq(inverse[i], inverse[j]); });
}

inline bool is_order_isomorphism(const AbstractPoset& P, const AbstractPoset& Q, const std::vector<Node>& map) {
  if (P.size() != Q.size() || map.size() != P.size()) return false;
  NodeSet hit(Q.size());
  for (Node v : map) {
    if (v >= Q.size() || hit.test(v)) return false;
    hit.set(v);
  }
  for (Node i = 0; i < P.size(); ++i) {
    for (Node j = 0; j < P.size(); ++j) {
      if (P.leq(i, j) != Q.leq(map[i], map[j])) return false;
    }
  }
  return true;
}

namespace detail {

struct NodeSignature {
  int rank;
  std::size_t up_covers, down_covers, up_size, down_size;
  auto operator<=>(const NodeSignature&) const = default;
};

inline std::vector<NodeSignature> node_signatures(const AbstractPoset& P) {
  std::vector<NodeSignature> out;
  out.reserve(P.size());
  for (Node i = 0; i < P.size(); ++i) {
    out.push_back({P.rank(i), P.upper_covers(i).size(), P.lower_covers(i).size(), P.up_set(i).count(),
                   P.down_set(i).count()});
  }
  return out;
}

}  // namespace detail

/// Order isomorphism P -> Q as a node map, or nullopt. Nodes are assigned in
/// rank order, so every non-minimal node's lower covers are already placed
/// and constrain its candidates.
inline std::optional<std::vector<Node>> poset_isomorphic(const AbstractPoset& P, const AbstractPoset& Q) {
  if (P.size() > kPosetIsoLimit || Q.size() > kPosetIsoLimit) {
    throw Error(ErrorKind::Unsupported, "poset isomorphism is limited to 5000 nodes");
  }
  if (P.size() != Q.size()) return std::nullopt;
  const std::size_t n = P.size();
  const auto sig_p = detail::node_signatures(P);
  const auto sig_q = detail::node_signatures(Q);
  {
    auto a = sig_p;
    auto b = sig_q;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  constexpr Node kUnset = static_cast<Node>(-1);
  std::vector<Node> map(n, kUnset);
  NodeSet used(n);
  const std::vector<Node>& order = P.rank_order();

  auto consistent = [&](Node a, Node x, std::size_t placed) {
    if (sig_p[a] != sig_q[x] || used.test(x)) return false;
    for (std::size_t k = 0; k < placed; ++k) {
      const Node b = order[k];
      if (P.leq(a, b) != Q.leq(x, map[b]) || P.leq(b, a) != Q.leq(map[b], x)) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t placed) -> bool {
    if (placed == n) return true;
    const Node a = order[placed];
    std::vector<Node> candidates;
    if (P.lower_covers(a).empty()) {
      for (Node x = 0; x < n; ++x) candidates.push_back(x);
    } else {
      candidates = Q.upper_covers(map[P.lower_covers(a).front()]);
    }
    for (Node x : candidates) {
      if (!consistent(a, x, placed)) continue;
      map[a] = x;
      used.set(x);
      if (self(self, placed + 1)) return true;
      used.reset(x);
      map[a] = kUnset;
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return map;
}

}  // namespace omlkit
