// Topological-like orders on locations and the pointwise (joint) order on
// product states that drives the waiting strategies.

#ifndef TAREACH_ORDER_HPP
#define TAREACH_ORDER_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tareach/automaton.hpp"

namespace tareach {

struct TopoOrder {
  std::vector<std::uint32_t> index;  // location -> position
  std::vector<bool> kept_edge;       // edge -> not dropped as a back edge

  bool operator==(TopoOrder const &) const = default;
};

/// DFS from the initial location ignoring edges into the current DFS stack,
/// then reverse postorder of what is left. Locations the DFS never reaches
/// follow in declaration order. A seed permutes the child visiting order.
TopoOrder extract_dag_order(TimedAutomaton const &p, std::optional<std::uint64_t> shuffle_seed = {});

struct JointOrder {
  std::vector<TopoOrder> per_process;
};

JointOrder make_joint_order(Network const &net, std::optional<std::uint64_t> shuffle_seed = {});

enum class JointRelation { less, greater, equal, incomparable };

JointRelation joint_compare(JointOrder const &j, ProductState const &a, ProductState const &b);

/// Linear extension of the joint order: sum of indices, then lexicographic.
struct LinearKey {
  std::uint64_t sum = 0;
  std::vector<std::uint32_t> indices;

  auto operator<=>(LinearKey const &) const = default;
  bool operator==(LinearKey const &) const = default;
};

LinearKey linear_key(JointOrder const &j, ProductState const &s);

/// One line per process: "name: loc0 loc1 ..." listed by increasing index.
std::string dump_order(Network const &net, JointOrder const &j);

}  // namespace tareach

#endif
