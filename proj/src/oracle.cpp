#include "syds/oracle.hpp"

namespace syds {

TransitionGraph build_transition_graph(const SyDS& syds,
                                       std::size_t node_cap) {
  const std::size_t n = syds.node_count();
  if (n > node_cap || n > 32)
    throw CapExceeded(
        "transition graph limited to " +
        std::to_string(std::min<std::size_t>(node_cap, 32)) +
        " nodes (" + std::to_string((std::size_t{1} << std::min<std::size_t>(
                                         node_cap, 32)) *
                                    sizeof(std::uint32_t)) +
        " bytes of successor entries), got " + std::to_string(n));
  TransitionGraph tg;
  tg.node_count = n;
  const std::size_t count = std::size_t{1} << n;
  tg.successor_index.resize(count);
  Configuration x(n), y(n);
  for (std::size_t i = 0; i < count; ++i) {
    x = Configuration::from_index(i, n);
    successor_into(syds, x, y);
    tg.successor_index[i] = static_cast<std::uint32_t>(y.to_index());
  }
  return tg;
}

bool oracle_reach(const TransitionGraph& tg, const Configuration& x,
                  const Configuration& y) {
  if (x.size() != tg.node_count || y.size() != tg.node_count)
    throw SydsError("configuration length does not match transition graph");
  const std::uint32_t target = static_cast<std::uint32_t>(y.to_index());
  std::uint32_t cur = static_cast<std::uint32_t>(x.to_index());
  std::vector<bool> visited(tg.config_count(), false);
  while (!visited[cur]) {
    if (cur == target) return true;
    visited[cur] = true;
    cur = tg.successor_index[cur];
  }
  return false;
}

bool oracle_conv(const TransitionGraph& tg, const Configuration& x) {
  if (x.size() != tg.node_count)
    throw SydsError("configuration length does not match transition graph");
  std::uint32_t cur = static_cast<std::uint32_t>(x.to_index());
  std::vector<bool> visited(tg.config_count(), false);
  while (!visited[cur]) {
    if (tg.successor_index[cur] == cur) return true;
    visited[cur] = true;
    cur = tg.successor_index[cur];
  }
  return false;
}

bool oracle_allconv(const TransitionGraph& tg) {
  // Peel configurations with no remaining predecessors; whatever survives
  // lies on a cycle, and convergence from everywhere needs all those cycles
  // to be self-loops.
  const std::size_t count = tg.config_count();
  std::vector<std::uint32_t> preds(count, 0);
  for (std::size_t i = 0; i < count; ++i) ++preds[tg.successor_index[i]];
  std::vector<std::uint32_t> queue;
  for (std::size_t i = 0; i < count; ++i)
    if (preds[i] == 0) queue.push_back(static_cast<std::uint32_t>(i));
  std::vector<bool> removed(count, false);
  while (!queue.empty()) {
    std::uint32_t v = queue.back();
    queue.pop_back();
    removed[v] = true;
    std::uint32_t s = tg.successor_index[v];
    if (--preds[s] == 0 && s != v) queue.push_back(s);
  }
  for (std::size_t i = 0; i < count; ++i)
    if (!removed[i] && tg.successor_index[i] != i) return false;
  return true;
}

}  // namespace syds
