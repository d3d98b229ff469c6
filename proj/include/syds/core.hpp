#ifndef SYDS_CORE_HPP_
#define SYDS_CORE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syds {

using NodeId = std::uint32_t;

class SydsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a configured resource limit (configuration count, step
/// budget, node cap) would be exceeded. CLI maps this to exit code 3.
class CapExceeded : public SydsError {
 public:
  using SydsError::SydsError;
};

/// One Boolean state per node, bit-packed. Node k lives at bit position k.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t size, bool fill = false);

  static Configuration from_string(std::string_view bits);  // "0101..."
  static Configuration from_index(std::uint64_t index, std::size_t size);

  std::size_t size() const { return size_; }
  bool get(NodeId v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(NodeId v, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (v & 63);
    if (value)
      words_[v >> 6] |= mask;
    else
      words_[v >> 6] &= ~mask;
  }

  /// Packs the whole configuration into one integer; requires size() <= 64.
  std::uint64_t to_index() const;
  std::string to_string() const;
  std::size_t hash() const;

  bool operator==(const Configuration&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const { return c.hash(); }
};

/// Simple directed graph with per-node ordered in-neighbor lists. The
/// in-neighbor order is the canonical argument order of local functions.
class Network {
 public:
  Network() = default;
  explicit Network(std::size_t node_count)
      : in_neighbors_(node_count), names_(node_count) {}

  std::size_t node_count() const { return in_neighbors_.size(); }
  void add_arc(NodeId from, NodeId to);
  bool has_arc(NodeId from, NodeId to) const;

  const std::vector<NodeId>& in_neighbors(NodeId v) const {
    return in_neighbors_[v];
  }
  /// Derived view, consistent with the in-neighbor lists.
  std::vector<std::vector<NodeId>> out_neighbors() const;

  std::size_t in_degree(NodeId v) const { return in_neighbors_[v].size(); }
  std::size_t max_in_degree() const;

  const std::string& name(NodeId v) const { return names_[v]; }
  void set_name(NodeId v, std::string name) { names_[v] = std::move(name); }
  bool has_names() const;
  /// Display name: the label when present, otherwise a zero-padded "n###".
  std::string display_name(NodeId v) const;

  /// Undirected adjacency obtained by forgetting arc orientations
  /// (deduplicated, no self entries).
  std::vector<std::vector<NodeId>> undirected_adjacency() const;

  bool operator==(const Network&) const = default;

 private:
  std::vector<std::vector<NodeId>> in_neighbors_;
  std::vector<std::string> names_;
};

/// Truth table over the closed in-neighborhood of a node. Lookup index is
/// built with the node's own state as the most significant bit, followed by
/// the in-neighbors in their stored order.
class LocalFunction {
 public:
  LocalFunction() = default;

  static LocalFunction from_table_string(std::string_view bits);
  static LocalFunction constant(unsigned arity, bool value);
  static LocalFunction from_lambda(
      unsigned arity, const std::function<bool(std::uint32_t)>& f);

  unsigned arity() const { return arity_; }
  std::size_t table_size() const { return std::size_t{1} << arity_; }
  bool eval(std::uint32_t packed_args) const {
    return (words_[packed_args >> 6] >> (packed_args & 63)) & 1u;
  }
  std::string table_string() const;

  bool operator==(const LocalFunction&) const = default;

 private:
  unsigned arity_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SyDS {
  Network network;
  std::vector<LocalFunction> functions;
  static constexpr unsigned domain_size = 2;

  std::size_t node_count() const { return network.node_count(); }
  bool operator==(const SyDS&) const = default;
};

/// Reports violations of the structural invariants (arity mismatches,
/// self-loops, parallel arcs, out-of-range ids). Empty means well-formed.
std::vector<std::string> validate(const SyDS& syds);

Configuration successor(const SyDS& syds, const Configuration& x);
void successor_into(const SyDS& syds, const Configuration& x,
                    Configuration& out);
bool is_fixed_point(const SyDS& syds, const Configuration& x);

/// Deterministic orbit summary. A complete result satisfies
/// x^(mu+lambda) = x^mu with x^0..x^(mu+lambda-1) pairwise distinct.
struct Trajectory {
  std::uint64_t tail_mu = 0;
  std::uint64_t period_lambda = 0;  // 0 only when truncated
  std::vector<Configuration> prefix;
  bool truncated = false;       // max_steps hit before any repeat
  bool prefix_complete = true;  // prefix covers all mu+lambda configurations

  bool reaches_fixed_point() const {
    return !truncated && period_lambda == 1;
  }
};

struct OrbitOptions {
  std::optional<std::uint64_t> max_steps;
  std::size_t memory_cap = std::size_t{1} << 22;  // stored configurations
  bool allow_fallback = true;  // constant-memory detection past the cap
  bool keep_prefix = true;
};

Trajectory orbit(const SyDS& syds, const Configuration& start,
                 const OrbitOptions& options = {});

/// Subsystem induced by a set of nodes that is closed under in-neighbors.
/// `members` must be sorted and duplicate-free; tables carry over unchanged.
SyDS induced_subsystem(const SyDS& syds, const std::vector<NodeId>& members);

/// Projection of a configuration onto a sorted member list.
Configuration project(const Configuration& x,
                      const std::vector<NodeId>& members);

}  // namespace syds

#endif  // SYDS_CORE_HPP_
