// Timed automata, networks of timed automata with binary synchronization,
// and the on-the-fly product transitions.

#ifndef TAREACH_AUTOMATON_HPP
#define TAREACH_AUTOMATON_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tareach/zone.hpp"

namespace tareach {

using LocationId = std::uint32_t;
using ProcessId = std::uint32_t;
using ActionId = std::uint32_t;

using AtomicConstraint = ClockConstraint;

struct Location {
  std::string name;
  bool initial = false;
  bool accepting = false;

  bool operator==(Location const &) const = default;
};

struct Edge {
  LocationId source = 0;
  LocationId target = 0;
  ActionId action = 0;
  std::vector<AtomicConstraint> guard;  // conjunction, empty = true
  std::vector<ClockId> resets;

  bool operator==(Edge const &) const = default;
};

struct TimedAutomaton {
  std::string name;
  std::vector<Location> locations;
  std::vector<Edge> edges;

  LocationId initial_location() const;
  std::optional<LocationId> find_location(std::string_view name) const;

  bool operator==(TimedAutomaton const &) const = default;
};

/// One side of a binary synchronization: `process@action`.
struct SyncEndpoint {
  ProcessId process = 0;
  ActionId action = 0;

  bool operator==(SyncEndpoint const &) const = default;
};

struct SyncPair {
  SyncEndpoint first;
  SyncEndpoint second;

  bool operator==(SyncPair const &) const = default;
};

/// Thrown for structurally invalid networks.
class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Network {
  std::string name;
  std::vector<std::string> clocks;   // clocks[k] is ClockId k+1
  std::vector<std::string> actions;  // global action names, indexed by ActionId
  std::vector<TimedAutomaton> processes;
  std::vector<SyncPair> syncs;

  std::size_t clock_count() const { return clocks.size(); }
  std::string const &clock_name(ClockId id) const { return clocks.at(id - 1); }

  std::optional<ClockId> find_clock(std::string_view name) const;
  std::optional<ActionId> find_action(std::string_view name) const;
  std::optional<ProcessId> find_process(std::string_view name) const;

  /// Returns the id of `name`, appending it to the action table if new.
  ActionId intern_action(std::string const &name);

  bool operator==(Network const &) const = default;
};

/// Throws ModelError unless every process has exactly one initial location,
/// every edge endpoint/clock/action is valid, and every sync pair joins two
/// distinct processes on actions they actually use.
void validate(Network const &net);

struct ProductState {
  std::vector<LocationId> components;

  bool operator==(ProductState const &) const = default;
  auto operator<=>(ProductState const &) const = default;
};

struct ProductStateHash {
  std::size_t operator()(ProductState const &s) const noexcept;
};

ProductState initial_state(Network const &net);

bool is_accepting(Network const &net, ProductState const &s);

LUBounds lu_bounds(Network const &net);

struct ProductEdge {
  std::vector<AtomicConstraint> guard;
  std::vector<ClockId> resets;
  std::string label;
  ProductState target;
};

/// Precomputed view of a network for product-edge enumeration: outgoing
/// edges per location and the local/synchronized split of every edge.
class ProductSystem {
public:
  explicit ProductSystem(Network const &net);

  Network const &network() const { return *net_; }

  /// Local edges in process order then edge declaration order, followed by
  /// synchronized pairs in sync declaration order. With a seed, the list is
  /// permuted by a generator seeded from (seed, s) so the same state always
  /// gets the same permutation.
  std::vector<ProductEdge> enabled_edges(ProductState const &s, std::optional<std::uint64_t> shuffle_seed = {}) const;

private:
  Network const *net_;
  // outgoing[p][loc] = edge indices of process p leaving loc, declaration order
  std::vector<std::vector<std::vector<std::uint32_t>>> outgoing_;
  // is_sync_edge[p][e]
  std::vector<std::vector<bool>> is_sync_edge_;
};

std::vector<ProductEdge> enabled_product_edges(Network const &net, ProductState const &s,
                                               std::optional<std::uint64_t> shuffle_seed = {});

std::string state_name(Network const &net, ProductState const &s);

}  // namespace tareach

#endif
