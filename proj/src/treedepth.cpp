#include "syds/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace syds {

std::vector<unsigned> TreedepthDecomposition::depths() const {
  const std::size_t n = parent.size();
  std::vector<unsigned> depth(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (depth[v] != 0) continue;
    // Walk up to a node of known depth (or a root), then unwind.
    std::vector<NodeId> chain;
    NodeId cur = v;
    while (depth[cur] == 0) {
      chain.push_back(cur);
      if (chain.size() > n) throw SydsError("parent relation has a cycle");
      if (!parent[cur]) break;
      NodeId p = *parent[cur];
      if (p >= n) throw SydsError("parent index out of range");
      cur = p;
    }
    unsigned base = depth[cur];  // 0 when cur is the root just pushed
    if (base == 0) {
      base = 1;
      depth[chain.back()] = base;
      chain.pop_back();
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      depth[*it] = ++base;
  }
  return depth;
}

unsigned TreedepthDecomposition::height() const {
  auto d = depths();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool validate_decomposition(const Network& net,
                            const TreedepthDecomposition& td) {
  const std::size_t n = net.node_count();
  if (td.parent.size() != n) return false;
  for (NodeId v = 0; v < n; ++v)
    if (td.parent[v] && (*td.parent[v] >= n || *td.parent[v] == v))
      return false;
  std::vector<unsigned> depth;
  try {
    depth = td.depths();
  } catch (const SydsError&) {
    return false;
  }
  auto is_ancestor = [&](NodeId a, NodeId d) {  // strict or equal
    NodeId cur = d;
    for (;;) {
      if (cur == a) return true;
      if (!td.parent[cur]) return false;
      cur = *td.parent[cur];
    }
  };
  const auto adj = net.undirected_adjacency();
  for (NodeId v = 0; v < n; ++v)
    for (NodeId u : adj[v]) {
      if (u > v) continue;
      if (!is_ancestor(u, v) && !is_ancestor(v, u)) return false;
    }
  return true;
}

namespace {

using Mask = std::uint64_t;

struct ExactSearch {
  const std::vector<std::vector<NodeId>>& adj;
  std::unordered_map<Mask, std::pair<unsigned, NodeId>> memo;

  std::vector<Mask> components(Mask mask) const {
    std::vector<Mask> comps;
    Mask rem = mask;
    while (rem) {
      NodeId seed = static_cast<NodeId>(std::countr_zero(rem));
      Mask comp = 0, frontier = Mask{1} << seed;
      while (frontier) {
        comp |= frontier;
        Mask next = 0;
        Mask f = frontier;
        while (f) {
          NodeId v = static_cast<NodeId>(std::countr_zero(f));
          f &= f - 1;
          for (NodeId u : adj[v]) {
            Mask bit = Mask{1} << u;
            if ((mask & bit) && !(comp & bit)) next |= bit;
          }
        }
        frontier = next;
      }
      comps.push_back(comp);
      rem &= ~comp;
    }
    return comps;
  }

  // Minimum treedepth of the connected subgraph `mask`, with the best root.
  unsigned solve_connected(Mask mask) {
    if (std::popcount(mask) == 1) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second.first;
    unsigned best = std::popcount(mask) + 1;
    NodeId best_root = static_cast<NodeId>(std::countr_zero(mask));
    Mask m = mask;
    while (m) {
      NodeId v = static_cast<NodeId>(std::countr_zero(m));
      m &= m - 1;
      Mask rest = mask & ~(Mask{1} << v);
      unsigned sub = 0;
      if (rest)
        for (Mask comp : components(rest))
          sub = std::max(sub, solve_connected(comp));
      if (1 + sub < best) {
        best = 1 + sub;
        best_root = v;
      }
      if (best == 2 && std::popcount(mask) > 1) break;  // cannot beat 2
    }
    memo.emplace(mask, std::make_pair(best, best_root));
    return best;
  }

  void build(Mask mask, std::optional<NodeId> above,
             TreedepthDecomposition& td) {
    if (std::popcount(mask) == 1) {
      td.parent[static_cast<NodeId>(std::countr_zero(mask))] = above;
      return;
    }
    solve_connected(mask);
    NodeId root = memo.at(mask).second;
    td.parent[root] = above;
    Mask rest = mask & ~(Mask{1} << root);
    for (Mask comp : components(rest)) build(comp, root, td);
  }
};

}  // namespace

TreedepthDecomposition compute_treedepth_exact(const Network& net,
                                               std::size_t node_cap) {
  const std::size_t n = net.node_count();
  if (n > node_cap || n > 63)
    throw CapExceeded("exact treedepth limited to " +
                      std::to_string(std::min<std::size_t>(node_cap, 63)) +
                      " nodes, got " + std::to_string(n));
  TreedepthDecomposition td;
  td.parent.assign(n, std::nullopt);
  if (n == 0) return td;
  const auto adj = net.undirected_adjacency();
  ExactSearch search{adj, {}};
  Mask all = n == 63 ? ~Mask{0} >> 1 : (Mask{1} << n) - 1;
  for (Mask comp : search.components(all))
    search.build(comp, std::nullopt, td);
  return td;
}

TreedepthDecomposition heuristic_decomposition(const Network& net) {
  const std::size_t n = net.node_count();
  const auto adj = net.undirected_adjacency();
  TreedepthDecomposition td;
  td.parent.assign(n, std::nullopt);
  std::vector<bool> visited(n, false);
  for (NodeId start = 0; start < n; ++start) {
    if (visited[start]) continue;
    // Iterative DFS; in an undirected graph every non-tree edge connects
    // an ancestor-descendant pair, so the DFS forest is a valid decomposition.
    std::vector<std::pair<NodeId, std::size_t>> stack{{start, 0}};
    visited[start] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next >= adj[v].size()) {
        stack.pop_back();
        continue;
      }
      NodeId u = adj[v][next++];
      if (!visited[u]) {
        visited[u] = true;
        td.parent[u] = v;
        stack.emplace_back(u, 0);
      }
    }
  }
  return td;
}

}  // namespace syds
