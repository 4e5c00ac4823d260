#pragma once

// Sub(L) and BSub(L) as explicit posets ordered by inclusion.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "omlkit/lattice.hpp"
#include "omlkit/poset.hpp"

namespace omlkit {

enum class SubFlavor { Sub, BSub };

struct EnumerateOptions {
  std::size_t node_cap = kDefaultNodeCap;
  unsigned threads = 1;
};

class SubalgebraPoset {
 public:
  /// `nodes` must be closed subsets of `owner`, sorted ascending and distinct.
  SubalgebraPoset(FiniteOrtholattice owner, std::vector<Mask> nodes, SubFlavor flavor, unsigned threads = 1)
      : owner_(std::move(owner)), nodes_(std::move(nodes)), flavor_(flavor) {
    const std::size_t n = nodes_.size();
    std::vector<NodeSet> up(n, NodeSet(n));
    auto fill_rows = [&](std::size_t first, std::size_t stride) {
      for (std::size_t i = first; i < n; i += stride) {
        for (std::size_t j = i; j < n; ++j) {
          if (is_subset(nodes_[i], nodes_[j])) up[i].set(j);
        }
      }
    };
    if (threads <= 1 || n < 256) {
      fill_rows(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(fill_rows, t, threads);
      for (auto& th : pool) th.join();
    }
    order_ = AbstractPoset(std::move(up));
  }

  const FiniteOrtholattice& owner() const noexcept { return owner_; }
  const std::vector<Mask>& nodes() const noexcept { return nodes_; }
  Mask node(Node i) const { return nodes_[i]; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const AbstractPoset& order() const noexcept { return order_; }
  SubFlavor flavor() const noexcept { return flavor_; }

  std::optional<Node> find(Mask m) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), m);
    if (it == nodes_.end() || *it != m) return std::nullopt;
    return static_cast<Node>(it - nodes_.begin());
  }

  Node index_of(Mask m) const {
    auto i = find(m);
    if (!i) throw Error(ErrorKind::MalformedInput, "set is not a node of this subalgebra poset");
    return *i;
  }

  std::vector<std::vector<int>> labels() const {
    std::vector<std::vector<int>> out;
    out.reserve(nodes_.size());
    for (Mask m : nodes_) out.push_back(bits_of(m));
    return out;
  }

 private:
  FiniteOrtholattice owner_;
  std::vector<Mask> nodes_;
  SubFlavor flavor_;
  AbstractPoset order_;
};

inline SubalgebraPoset enumerate_subalgebras(const FiniteOrtholattice& L, bool boolean_only,
                                             const EnumerateOptions& options = {}) {
  return SubalgebraPoset(L, subalgebra_masks(L, boolean_only, options.node_cap),
                         boolean_only ? SubFlavor::BSub : SubFlavor::Sub, options.threads);
}

inline SubalgebraPoset sub(const FiniteOrtholattice& L, const EnumerateOptions& options = {}) {
  return enumerate_subalgebras(L, false, options);
}

inline SubalgebraPoset bsub(const FiniteOrtholattice& L, const EnumerateOptions& options = {}) {
  return enumerate_subalgebras(L, true, options);
}

inline std::vector<Mask> node_masks(const SubalgebraPoset& P, const std::vector<Node>& nodes) {
  std::vector<Mask> out;
  out.reserve(nodes.size());
  for (Node i : nodes) out.push_back(P.node(i));
  return out;
}

}  // namespace omlkit
