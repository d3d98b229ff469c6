#ifndef SYDS_TREEDEPTH_HPP_
#define SYDS_TREEDEPTH_HPP_

#include <optional>
#include <vector>

#include "syds/core.hpp"

namespace syds {

/// Rooted forest given by parent pointers (nullopt = root). Valid for a
/// network when its ancestor-descendant closure covers every underlying
/// undirected edge. Depth of a root is 1; height is the maximum depth.
struct TreedepthDecomposition {
  std::vector<std::optional<NodeId>> parent;

  std::size_t node_count() const { return parent.size(); }
  /// Depth of every node; throws if the parent relation is not a forest.
  std::vector<unsigned> depths() const;
  unsigned height() const;

  bool operator==(const TreedepthDecomposition&) const = default;
};

/// True iff `td` is a forest over the same node set whose closure covers
/// every edge of the underlying undirected graph of `net`.
bool validate_decomposition(const Network& net,
                            const TreedepthDecomposition& td);

/// Minimum-height decomposition by recursive vertex-removal search over
/// connected components, memoized on vertex subsets.
TreedepthDecomposition compute_treedepth_exact(const Network& net,
                                               std::size_t node_cap = 20);

/// DFS-forest decomposition: always valid, height at most the node count.
TreedepthDecomposition heuristic_decomposition(const Network& net);

}  // namespace syds

#endif  // SYDS_TREEDEPTH_HPP_
