#include "syds/core.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace syds {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

std::string padded_index_name(std::size_t index, std::size_t count) {
  std::size_t width = 1;
  for (std::size_t v = count > 0 ? count - 1 : 0; v >= 10; v /= 10) ++width;
  std::string digits = std::to_string(index);
  return "n" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

Configuration::Configuration(std::size_t size, bool fill)
    : size_(size), words_(words_for(size), fill ? ~std::uint64_t{0} : 0) {
  if (fill && size_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

Configuration Configuration::from_string(std::string_view bits) {
  Configuration c(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw SydsError("configuration bit string must contain only 0/1");
    c.set(static_cast<NodeId>(i), bits[i] == '1');
  }
  return c;
}

Configuration Configuration::from_index(std::uint64_t index,
                                        std::size_t size) {
  if (size > 64) throw SydsError("from_index requires at most 64 nodes");
  Configuration c(size);
  if (!c.words_.empty()) c.words_[0] = index;
  if (size < 64 && !c.words_.empty())
    c.words_[0] &= (std::uint64_t{1} << size) - 1;
  return c;
}

std::uint64_t Configuration::to_index() const {
  if (size_ > 64) throw SydsError("to_index requires at most 64 nodes");
  return words_.empty() ? 0 : words_[0];
}

std::string Configuration::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(static_cast<NodeId>(i))) s[i] = '1';
  return s;
}

std::size_t Configuration::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h);
}

void Network::add_arc(NodeId from, NodeId to) {
  if (from >= node_count() || to >= node_count())
    throw SydsError("arc endpoint out of range");
  in_neighbors_[to].push_back(from);
}

bool Network::has_arc(NodeId from, NodeId to) const {
  const auto& ins = in_neighbors_[to];
  return std::find(ins.begin(), ins.end(), from) != ins.end();
}

std::vector<std::vector<NodeId>> Network::out_neighbors() const {
  std::vector<std::vector<NodeId>> out(node_count());
  for (NodeId v = 0; v < node_count(); ++v)
    for (NodeId u : in_neighbors_[v]) out[u].push_back(v);
  return out;
}

std::size_t Network::max_in_degree() const {
  std::size_t d = 0;
  for (const auto& ins : in_neighbors_) d = std::max(d, ins.size());
  return d;
}

bool Network::has_names() const {
  for (const auto& n : names_)
    if (!n.empty()) return true;
  return false;
}

std::string Network::display_name(NodeId v) const {
  if (!names_[v].empty()) return names_[v];
  return padded_index_name(v, node_count());
}

std::vector<std::vector<NodeId>> Network::undirected_adjacency() const {
  std::vector<std::unordered_set<NodeId>> sets(node_count());
  for (NodeId v = 0; v < node_count(); ++v) {
    for (NodeId u : in_neighbors_[v]) {
      if (u == v) continue;
      sets[v].insert(u);
      sets[u].insert(v);
    }
  }
  std::vector<std::vector<NodeId>> adj(node_count());
  for (NodeId v = 0; v < node_count(); ++v) {
    adj[v].assign(sets[v].begin(), sets[v].end());
    std::sort(adj[v].begin(), adj[v].end());
  }
  return adj;
}

LocalFunction LocalFunction::from_table_string(std::string_view bits) {
  const std::size_t n = bits.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw SydsError("truth table length must be a power of two");
  LocalFunction f;
  f.arity_ = 0;
  while ((std::size_t{1} << f.arity_) < n) ++f.arity_;
  f.words_.assign(words_for(n), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (bits[i] == '1')
      f.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else if (bits[i] != '0')
      throw SydsError("truth table must contain only 0/1");
  }
  return f;
}

LocalFunction LocalFunction::constant(unsigned arity, bool value) {
  LocalFunction f;
  f.arity_ = arity;
  f.words_.assign(words_for(std::size_t{1} << arity),
                  value ? ~std::uint64_t{0} : 0);
  return f;
}

LocalFunction LocalFunction::from_lambda(
    unsigned arity, const std::function<bool(std::uint32_t)>& fn) {
  LocalFunction f;
  f.arity_ = arity;
  const std::size_t n = std::size_t{1} << arity;
  f.words_.assign(words_for(n), 0);
  for (std::size_t i = 0; i < n; ++i)
    if (fn(static_cast<std::uint32_t>(i)))
      f.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  return f;
}

std::string LocalFunction::table_string() const {
  std::string s(table_size(), '0');
  for (std::size_t i = 0; i < s.size(); ++i)
    if (eval(static_cast<std::uint32_t>(i))) s[i] = '1';
  return s;
}

std::vector<std::string> validate(const SyDS& syds) {
  std::vector<std::string> violations;
  const Network& net = syds.network;
  const std::size_t n = net.node_count();
  if (syds.functions.size() != n) {
    violations.push_back("expected one local function per node");
    return violations;
  }
  for (NodeId v = 0; v < n; ++v) {
    const auto& ins = net.in_neighbors(v);
    std::unordered_set<NodeId> seen;
    for (NodeId u : ins) {
      if (u >= n) {
        violations.push_back("node " + net.display_name(v) +
                             ": in-neighbor index out of range");
        continue;
      }
      if (u == v)
        violations.push_back("node " + net.display_name(v) + ": self-loop");
      else if (!seen.insert(u).second)
        violations.push_back("node " + net.display_name(v) +
                             ": parallel arc from " + net.display_name(u));
    }
    const unsigned expected = static_cast<unsigned>(ins.size()) + 1;
    if (syds.functions[v].arity() != expected)
      violations.push_back(
          "node " + net.display_name(v) + ": arity mismatch (table covers " +
          std::to_string(syds.functions[v].arity()) + " arguments, expected " +
          std::to_string(expected) + ")");
  }
  return violations;
}

void successor_into(const SyDS& syds, const Configuration& x,
                    Configuration& out) {
  const std::size_t n = syds.node_count();
  if (x.size() != n)
    throw SydsError("configuration length does not match node count");
  if (out.size() != n) out = Configuration(n);
  for (NodeId v = 0; v < n; ++v) {
    std::uint32_t idx = x.get(v) ? 1u : 0u;
    for (NodeId u : syds.network.in_neighbors(v))
      idx = (idx << 1) | (x.get(u) ? 1u : 0u);
    out.set(v, syds.functions[v].eval(idx));
  }
}

Configuration successor(const SyDS& syds, const Configuration& x) {
  Configuration y(syds.node_count());
  successor_into(syds, x, y);
  return y;
}

bool is_fixed_point(const SyDS& syds, const Configuration& x) {
  return successor(syds, x) == x;
}

namespace {

// Brent cycle detection; constant memory apart from two configurations.
// Returns (mu, lambda), or nothing if max_steps successor applications
// were exhausted first.
std::optional<std::pair<std::uint64_t, std::uint64_t>> brent_cycle(
    const SyDS& syds, const Configuration& start,
    std::optional<std::uint64_t> max_steps) {
  std::uint64_t budget = max_steps ? *max_steps : ~std::uint64_t{0};
  if (budget == 0) return std::nullopt;
  std::uint64_t power = 1, lambda = 1;
  Configuration tortoise = start;
  Configuration hare = successor(syds, start);
  --budget;
  Configuration scratch(start.size());
  while (!(tortoise == hare)) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    if (budget == 0) return std::nullopt;
    successor_into(syds, hare, scratch);
    std::swap(hare, scratch);
    --budget;
    ++lambda;
  }
  // mu: advance a hare lambda steps ahead of start, then walk together.
  Configuration a = start;
  Configuration b = start;
  for (std::uint64_t i = 0; i < lambda; ++i) {
    Configuration next(b.size());
    successor_into(syds, b, next);
    b = std::move(next);
  }
  std::uint64_t mu = 0;
  while (!(a == b)) {
    Configuration na(a.size()), nb(b.size());
    successor_into(syds, a, na);
    successor_into(syds, b, nb);
    a = std::move(na);
    b = std::move(nb);
    ++mu;
  }
  return std::make_pair(mu, lambda);
}

}  // namespace

Trajectory orbit(const SyDS& syds, const Configuration& start,
                 const OrbitOptions& options) {
  if (start.size() != syds.node_count())
    throw SydsError("configuration length does not match node count");
  Trajectory result;
  std::unordered_map<Configuration, std::uint64_t, ConfigurationHash> seen;
  std::vector<Configuration> sequence;
  Configuration current = start;
  std::uint64_t step = 0;
  bool cap_hit = false;
  for (;;) {
    auto it = seen.find(current);
    if (it != seen.end()) {
      result.tail_mu = it->second;
      result.period_lambda = step - it->second;
      if (options.keep_prefix) result.prefix = std::move(sequence);
      return result;
    }
    if (options.max_steps && step >= *options.max_steps) {
      result.truncated = true;
      result.period_lambda = 0;
      result.tail_mu = step;
      if (options.keep_prefix) result.prefix = std::move(sequence);
      result.prefix_complete = false;
      return result;
    }
    if (seen.size() >= options.memory_cap) {
      cap_hit = true;
      break;
    }
    seen.emplace(current, step);
    if (options.keep_prefix) sequence.push_back(current);
    Configuration next(current.size());
    successor_into(syds, current, next);
    current = std::move(next);
    ++step;
  }
  if (cap_hit && !options.allow_fallback)
    throw CapExceeded("orbit memory cap of " +
                      std::to_string(options.memory_cap) +
                      " stored configurations exceeded");
  // Brent needs roughly 3(mu+lambda) applications; widen its budget and
  // enforce the "repeat within max_steps" contract on the result instead.
  std::optional<std::uint64_t> brent_budget;
  if (options.max_steps) {
    const std::uint64_t m = *options.max_steps;
    brent_budget = m > (~std::uint64_t{0} - 8) / 3 ? ~std::uint64_t{0}
                                                   : 3 * m + 8;
  }
  auto found = brent_cycle(syds, start, brent_budget);
  if (found && options.max_steps &&
      found->first + found->second > *options.max_steps)
    found.reset();
  if (!found) {
    result.truncated = true;
    result.period_lambda = 0;
    result.tail_mu = options.max_steps ? *options.max_steps : 0;
    result.prefix_complete = false;
    if (options.keep_prefix) result.prefix = std::move(sequence);
    return result;
  }
  result.tail_mu = found->first;
  result.period_lambda = found->second;
  if (options.keep_prefix) {
    result.prefix = std::move(sequence);  // first memory_cap configurations
    result.prefix_complete =
        result.prefix.size() >= result.tail_mu + result.period_lambda;
    if (result.prefix_complete)
      result.prefix.resize(result.tail_mu + result.period_lambda);
  } else {
    result.prefix_complete = false;
  }
  return result;
}

SyDS induced_subsystem(const SyDS& syds, const std::vector<NodeId>& members) {
  std::unordered_map<NodeId, NodeId> to_new;
  to_new.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    to_new.emplace(members[i], static_cast<NodeId>(i));
  SyDS sub;
  sub.network = Network(members.size());
  sub.functions.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const NodeId old = members[i];
    sub.network.set_name(static_cast<NodeId>(i),
                         syds.network.name(old));
    for (NodeId u : syds.network.in_neighbors(old)) {
      auto it = to_new.find(u);
      if (it == to_new.end())
        throw SydsError("member set is not closed under in-neighbors");
      sub.network.add_arc(it->second, static_cast<NodeId>(i));
    }
    sub.functions[i] = syds.functions[old];
  }
  return sub;
}

Configuration project(const Configuration& x,
                      const std::vector<NodeId>& members) {
  Configuration y(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    y.set(static_cast<NodeId>(i), x.get(members[i]));
  return y;
}

}  // namespace syds
