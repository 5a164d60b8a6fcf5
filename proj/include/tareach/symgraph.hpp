// The abstract zone graph: (state, Extra+_LU zone) nodes and their
// symbolic successors, plus an exhaustive enumeration used as ground truth.

#ifndef TAREACH_SYMGRAPH_HPP
#define TAREACH_SYMGRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tareach/automaton.hpp"
#include "tareach/zone.hpp"

namespace tareach {

struct SymNode {
  ProductState state;
  Dbm zone;

  bool operator==(SymNode const &) const = default;
};

struct SymNodeHash {
  std::size_t operator()(SymNode const &n) const noexcept;
};

/// Same discrete state and zone inclusion.
bool node_subsumes(SymNode const &big, SymNode const &small);

/// Delay, guard, then reset, without abstraction. nullopt if the guard
/// cannot be met from any delayed valuation.
std::optional<Dbm> successor_zone(Dbm const &zone, ProductEdge const &edge);

class ZoneGraph {
public:
  explicit ZoneGraph(Network const &net, std::optional<std::uint64_t> edge_shuffle_seed = {});

  Network const &network() const { return system_.network(); }
  LUBounds const &lu() const { return lu_; }

  SymNode initial_node() const;

  /// One successor per enabled product edge whose guard is satisfiable,
  /// in edge enumeration order; every zone is extrapolated.
  std::vector<SymNode> successors(SymNode const &node) const;

  bool is_accepting(SymNode const &node) const;

private:
  ProductSystem system_;
  LUBounds lu_;
  std::optional<std::uint64_t> shuffle_seed_;
};

SymNode initial_node(Network const &net);
std::vector<SymNode> successors(Network const &net, SymNode const &node);

class OracleLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  bool reachable = false;
  std::vector<SymNode> nodes;  // discovery (BFS) order
};

/// Full BFS of the abstract zone graph deduplicating only equal nodes.
/// Throws OracleLimitExceeded once more than `node_limit` nodes are found.
OracleResult oracle_enumerate(Network const &net, std::size_t node_limit);

}  // namespace tareach

#endif
