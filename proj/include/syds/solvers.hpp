#ifndef SYDS_SOLVERS_HPP_
#define SYDS_SOLVERS_HPP_

#include <optional>
#include <vector>

#include "syds/core.hpp"

namespace syds {

struct ProblemInstance {
  SyDS syds;
  std::optional<Configuration> start;
  std::optional<Configuration> target;
  std::optional<std::uint64_t> horizon;

  bool operator==(const ProblemInstance&) const = default;
};

struct SolverLimits {
  std::size_t orbit_memory_cap = std::size_t{1} << 22;
  std::size_t bruteforce_node_cap = 24;
  std::size_t bounded_set_cap = 24;  // on p*d^p+1
};

struct ReachResult {
  bool reachable = false;
  std::optional<std::uint64_t> witness_step;
};

/// Target appears on the forward orbit of start within
/// min(horizon, mu+lambda) steps; zero steps count (y = x is reachable).
ReachResult solve_reach(const ProblemInstance& inst,
                        const SolverLimits& limits = {});

struct ConvResult {
  bool converges = false;
  std::optional<Configuration> fixed_point;
};

/// A fixed point is reached from start (within the horizon when given).
ConvResult solve_conv(const ProblemInstance& inst,
                      const SolverLimits& limits = {});

struct AllConvResult {
  bool all_converge = false;
  /// A starting configuration that never reaches a fixed point, when found.
  std::optional<Configuration> counterexample;
};

/// Every configuration converges; decided by walking the successor map over
/// all 2^n configurations with merged, memoized orbits.
AllConvResult solve_allconv_bruteforce(const ProblemInstance& inst,
                                       const SolverLimits& limits = {});

/// X_v: every node with a directed path to the anchor, plus the anchor.
struct InfluenceSet {
  NodeId anchor = 0;
  std::vector<NodeId> members;  // sorted, closed under in-neighbors
};

std::vector<InfluenceSet> influence_sets(const Network& net);

/// Longest directed path (arc count) of a DAG; nullopt when cyclic.
std::optional<std::size_t> longest_directed_path(const Network& net);

/// Decides Convergence by solving the restriction to every influence set.
/// Requires an acyclic network; throws SydsError otherwise.
bool solve_conv_bounded(const ProblemInstance& inst,
                        const SolverLimits& limits = {});

/// Decides Convergence Guarantee by branching over all starting
/// configurations of every influence-set restriction. Falls back to the
/// brute-force enumerator when the network has a directed cycle.
bool solve_allconv_bounded(const ProblemInstance& inst,
                           const SolverLimits& limits = {});

}  // namespace syds

#endif  // SYDS_SOLVERS_HPP_
