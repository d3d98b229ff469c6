#include "syds/solvers.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace syds {

namespace {

const Configuration& require_start(const ProblemInstance& inst) {
  if (!inst.start) throw SydsError("instance has no starting configuration");
  if (inst.start->size() != inst.syds.node_count())
    throw SydsError("starting configuration length mismatch");
  return *inst.start;
}

}  // namespace

ReachResult solve_reach(const ProblemInstance& inst,
                        const SolverLimits& limits) {
  const Configuration& start = require_start(inst);
  if (!inst.target) throw SydsError("instance has no target configuration");
  if (inst.target->size() != inst.syds.node_count())
    throw SydsError("target configuration length mismatch");
  const Configuration& target = *inst.target;

  Configuration current = start;
  std::uint64_t step = 0;
  std::unordered_map<Configuration, std::uint64_t, ConfigurationHash> seen;
  for (;;) {
    if (current == target) return {true, step};
    if (inst.horizon && step >= *inst.horizon) return {false, std::nullopt};
    auto [it, fresh] = seen.emplace(current, step);
    if (!fresh) return {false, std::nullopt};  // looped without the target
    if (seen.size() > limits.orbit_memory_cap)
      throw CapExceeded("reachability walk exceeded the configuration cap");
    Configuration next(current.size());
    successor_into(inst.syds, current, next);
    current = std::move(next);
    ++step;
  }
}

ConvResult solve_conv(const ProblemInstance& inst,
                      const SolverLimits& limits) {
  const Configuration& start = require_start(inst);
  Configuration current = start;
  Configuration next(current.size());
  std::uint64_t step = 0;
  std::unordered_map<Configuration, std::uint64_t, ConfigurationHash> seen;
  for (;;) {
    successor_into(inst.syds, current, next);
    if (next == current) return {true, current};
    if (inst.horizon && step >= *inst.horizon) return {false, std::nullopt};
    auto [it, fresh] = seen.emplace(current, step);
    if (!fresh) return {false, std::nullopt};  // non-trivial cycle
    if (seen.size() > limits.orbit_memory_cap)
      throw CapExceeded("convergence walk exceeded the configuration cap");
    std::swap(current, next);
    ++step;
  }
}

AllConvResult solve_allconv_bruteforce(const ProblemInstance& inst,
                                       const SolverLimits& limits) {
  const std::size_t n = inst.syds.node_count();
  if (n > limits.bruteforce_node_cap || n > 32)
    throw CapExceeded("brute-force convergence guarantee limited to " +
                      std::to_string(std::min<std::size_t>(
                          limits.bruteforce_node_cap, 32)) +
                      " nodes, got " + std::to_string(n));
  const std::size_t count = std::size_t{1} << n;
  enum : std::uint8_t { kUnknown = 0, kOnPath = 1, kConv = 2, kDiverge = 3 };
  std::vector<std::uint8_t> state(count, kUnknown);
  std::vector<std::uint32_t> succ(count, 0);
  std::vector<bool> succ_known(count, false);
  Configuration x(n), y(n);
  std::vector<std::uint32_t> path;

  auto successor_of = [&](std::uint32_t i) {
    if (!succ_known[i]) {
      x = Configuration::from_index(i, n);
      successor_into(inst.syds, x, y);
      succ[i] = static_cast<std::uint32_t>(y.to_index());
      succ_known[i] = true;
    }
    return succ[i];
  };

  AllConvResult result{true, std::nullopt};
  for (std::size_t s = 0; s < count; ++s) {
    if (state[s] != kUnknown) continue;
    path.clear();
    std::uint32_t cur = static_cast<std::uint32_t>(s);
    while (state[cur] == kUnknown) {
      state[cur] = kOnPath;
      path.push_back(cur);
      cur = successor_of(cur);
    }
    std::uint8_t verdict;
    if (state[cur] == kOnPath) {
      // Fresh cycle: self-loop iff its entry point maps to itself.
      verdict = successor_of(cur) == cur ? kConv : kDiverge;
    } else {
      verdict = state[cur];
    }
    for (std::uint32_t v : path) state[v] = verdict;
    if (verdict == kDiverge && result.all_converge) {
      result.all_converge = false;
      result.counterexample = Configuration::from_index(s, n);
    }
  }
  if (!inst.horizon) return result;

  // Bounded-horizon variant: every configuration must reach a fixed point
  // within the given number of steps.
  if (!result.all_converge) return result;
  for (std::size_t s = 0; s < count; ++s) {
    std::uint32_t cur = static_cast<std::uint32_t>(s);
    for (std::uint64_t t = 0; t < *inst.horizon && successor_of(cur) != cur;
         ++t)
      cur = successor_of(cur);
    if (successor_of(cur) != cur)
      return {false, Configuration::from_index(s, n)};
  }
  return result;
}

std::vector<InfluenceSet> influence_sets(const Network& net) {
  const std::size_t n = net.node_count();
  std::vector<InfluenceSet> sets(n);
  std::vector<bool> mark(n);
  for (NodeId v = 0; v < n; ++v) {
    std::fill(mark.begin(), mark.end(), false);
    std::vector<NodeId> stack{v};
    mark[v] = true;
    while (!stack.empty()) {
      NodeId cur = stack.back();
      stack.pop_back();
      for (NodeId u : net.in_neighbors(cur))
        if (!mark[u]) {
          mark[u] = true;
          stack.push_back(u);
        }
    }
    sets[v].anchor = v;
    for (NodeId u = 0; u < n; ++u)
      if (mark[u]) sets[v].members.push_back(u);
  }
  return sets;
}

std::optional<std::size_t> longest_directed_path(const Network& net) {
  const std::size_t n = net.node_count();
  std::vector<std::size_t> remaining(n, 0);
  for (NodeId v = 0; v < n; ++v) remaining[v] = net.in_degree(v);
  auto out = net.out_neighbors();
  std::deque<NodeId> queue;
  for (NodeId v = 0; v < n; ++v)
    if (remaining[v] == 0) queue.push_back(v);
  std::vector<std::size_t> dist(n, 0);
  std::size_t processed = 0, longest = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    ++processed;
    longest = std::max(longest, dist[v]);
    for (NodeId w : out[v]) {
      dist[w] = std::max(dist[w], dist[v] + 1);
      if (--remaining[w] == 0) queue.push_back(w);
    }
  }
  if (processed != n) return std::nullopt;  // directed cycle
  return longest;
}

namespace {

std::size_t bounded_set_limit(const Network& net, const SolverLimits& limits,
                              const char* problem) {
  auto p = longest_directed_path(net);
  if (!p)
    throw SydsError(std::string(problem) +
                    ": network has a directed cycle, the bounded-path "
                    "decomposition does not apply");
  const std::size_t d = net.max_in_degree();
  // p*d^p + 1 with saturation; only used for the cap check.
  long double bound = 1;
  for (std::size_t i = 0; i < *p; ++i) bound *= static_cast<long double>(d);
  bound = bound * static_cast<long double>(*p) + 1;
  if (bound > static_cast<long double>(limits.bounded_set_cap))
    throw CapExceeded(std::string(problem) + ": p*d^p+1 bound " +
                      std::to_string(static_cast<double>(bound)) +
                      " exceeds the configured cap of " +
                      std::to_string(limits.bounded_set_cap));
  return static_cast<std::size_t>(bound);
}

}  // namespace

bool solve_conv_bounded(const ProblemInstance& inst,
                        const SolverLimits& limits) {
  const Configuration& start = require_start(inst);
  bounded_set_limit(inst.syds.network, limits, "conv-bounded");
  for (const InfluenceSet& set : influence_sets(inst.syds.network)) {
    SyDS sub = induced_subsystem(inst.syds, set.members);
    ProblemInstance sub_inst;
    sub_inst.syds = std::move(sub);
    sub_inst.start = project(start, set.members);
    sub_inst.horizon = inst.horizon;
    if (!solve_conv(sub_inst, limits).converges) return false;
  }
  return true;
}

bool solve_allconv_bounded(const ProblemInstance& inst,
                           const SolverLimits& limits) {
  if (!longest_directed_path(inst.syds.network)) {
    ProblemInstance whole = inst;
    whole.start.reset();
    whole.target.reset();
    return solve_allconv_bruteforce(whole, limits).all_converge;
  }
  bounded_set_limit(inst.syds.network, limits, "allconv-bounded");
  for (const InfluenceSet& set : influence_sets(inst.syds.network)) {
    ProblemInstance sub_inst;
    sub_inst.syds = induced_subsystem(inst.syds, set.members);
    sub_inst.horizon = inst.horizon;
    if (!solve_allconv_bruteforce(sub_inst, limits).all_converge)
      return false;
  }
  return true;
}

}  // namespace syds
