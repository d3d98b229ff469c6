#ifndef SYDS_ORACLE_HPP_
#define SYDS_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "syds/core.hpp"

namespace syds {

/// Explicit successor map over the full configuration space. Entry i is the
/// index of the successor of the i-th configuration, where bit k of the
/// index is the state of node k.
struct TransitionGraph {
  std::vector<std::uint32_t> successor_index;
  std::size_t node_count = 0;

  std::size_t config_count() const { return successor_index.size(); }
};

/// Builds the table by enumerating all 2^n configurations. Refuses to start
/// when n exceeds the cap (default 24, about 64 MiB of successor entries).
TransitionGraph build_transition_graph(const SyDS& syds,
                                       std::size_t node_cap = 24);

bool oracle_reach(const TransitionGraph& tg, const Configuration& x,
                  const Configuration& y);
bool oracle_conv(const TransitionGraph& tg, const Configuration& x);
bool oracle_allconv(const TransitionGraph& tg);

}  // namespace syds

#endif  // SYDS_ORACLE_HPP_
