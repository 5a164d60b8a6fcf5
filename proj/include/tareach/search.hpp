// Zone-based reachability with a subsumption-maximal passed store and
// pluggable waiting-list policies:
//
//   bfs      FIFO
//   dfs      LIFO
//   r-bfs    highest rank first; ranks are maintained on a tree over the
//            passed nodes so that a node covering an expanded node outranks
//            everything still waiting below it
//   w-bfs    minimal product state w.r.t. the joint topological order first
//   tw-bfs   true-zone nodes first, then as w-bfs
//
// Ties are always broken FIFO. Every run counts visited nodes and mistakes
// (expanded nodes that are later evicted from the passed store by a bigger
// node).

#ifndef TAREACH_SEARCH_HPP
#define TAREACH_SEARCH_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tareach/automaton.hpp"
#include "tareach/order.hpp"
#include "tareach/symgraph.hpp"

namespace tareach {

enum class Strategy { bfs, dfs, rank_bfs, waiting, tw_bfs };

inline constexpr Strategy kAllStrategies[] = {Strategy::bfs, Strategy::dfs, Strategy::rank_bfs, Strategy::waiting,
                                              Strategy::tw_bfs};

std::string_view to_string(Strategy s);

/// Accepts "bfs", "dfs", "r-bfs", "w-bfs", "tw-bfs" and the underscore
/// spellings "rank_bfs", "waiting", "tw_bfs".
std::optional<Strategy> parse_strategy(std::string_view name);

class Rank {
public:
  constexpr Rank() = default;
  constexpr explicit Rank(std::uint64_t v) : value_{v} {}

  static constexpr Rank infinity() { return Rank{kInfinite}; }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr std::uint64_t value() const { return value_; }
  constexpr Rank next() const { return is_infinite() ? *this : Rank{value_ + 1}; }

  constexpr auto operator<=>(Rank const &) const = default;

private:
  static constexpr std::uint64_t kInfinite = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

/// rank 0, or infinity for the true zone
Rank init_rank(SymNode const &node);

struct SearchStats {
  std::uint64_t visited = 0;
  std::uint64_t mistakes = 0;
  std::uint64_t stored_max = 0;
  std::uint64_t stored_final = 0;
  std::uint64_t visited_ranking = 0;

  bool operator==(SearchStats const &) const = default;
};

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct StoredNode {
  SymNode node;
  Rank rank;
  bool in_waiting = false;
  bool expanded = false;
  bool alive = true;
  bool true_zone = false;
  NodeId parent = kNoNode;
  NodeId first_child = kNoNode;
  NodeId last_child = kNoNode;
  NodeId prev_sibling = kNoNode;
  NodeId next_sibling = kNoNode;
};

/// Arena of stored nodes. When linking is enabled the alive nodes also form
/// a tree (first-child / sibling lists) under a virtual root with id 0, and
/// removing a node splices its children into its parent.
class PassedTree {
public:
  explicit PassedTree(bool link = true);

  NodeId root() const { return 0; }
  bool linked() const { return link_; }

  /// Adds a node below the nearest alive ancestor of `parent`.
  NodeId add(SymNode node, Rank rank, NodeId parent);

  /// Unlinks `id`, reattaching its children to its parent in its place.
  void splice_remove(NodeId id);

  /// Highest rank among waiting nodes in the subtree of `id` (0 if none).
  /// Adds the number of nodes walked to `touched`.
  Rank max_rank_waiting(NodeId id, std::uint64_t &touched) const;

  std::vector<NodeId> children(NodeId id) const;
  bool is_leaf(NodeId id) const { return nodes_[id].first_child == kNoNode; }

  StoredNode const &operator[](NodeId id) const { return nodes_[id]; }
  StoredNode &operator[](NodeId id) { return nodes_[id]; }

  /// Arena size including the virtual root and removed nodes.
  std::size_t capacity() const { return nodes_.size(); }
  std::size_t alive_count() const { return alive_; }

private:
  bool link_;
  std::vector<StoredNode> nodes_;
  std::size_t alive_ = 0;
};

/// Waiting-list priority; smaller is taken first.
struct WaitKey {
  std::uint64_t tier = 0;
  LinearKey topo;
  std::uint64_t seq = 0;

  auto operator<=>(WaitKey const &) const = default;
  bool operator==(WaitKey const &) const = default;
};

/// Priority of a node for a given policy. `topo` is only read by the
/// waiting strategies; `seq` is a monotone insertion counter.
WaitKey wait_key(Strategy s, Rank rank, bool true_zone, LinearKey const &topo, std::uint64_t seq);

/// Binary heap over WaitKey with lazy deletion: entries whose node is no
/// longer waiting are skipped on pop.
class WaitingList {
public:
  explicit WaitingList(Strategy s, JointOrder const *order = nullptr) : strategy_{s}, order_{order} {}

  void push(PassedTree const &tree, NodeId id);

  /// Takes the best waiting node, or nullopt when none is left.
  std::optional<NodeId> pop(PassedTree const &tree);

private:
  struct Entry {
    WaitKey key;
    NodeId id;
    bool operator>(Entry const &o) const { return key > o.key; }
  };

  Strategy strategy_;
  JointOrder const *order_;
  std::uint64_t seq_ = 0;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
};

struct StrategyConfig {
  Strategy strategy = Strategy::bfs;
  /// Used by w-bfs and tw-bfs; built from the network with
  /// `order_shuffle_seed` when absent.
  std::optional<JointOrder> order;
  std::optional<std::uint64_t> edge_shuffle_seed;
  std::optional<std::uint64_t> order_shuffle_seed;
  /// Check the search invariants after every step and throw AuditFailure on
  /// the first violation. Quadratic; meant for tests.
  bool audit = false;
};

class AuditFailure : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

enum class Answer { reachable, unreachable };

std::string_view to_string(Answer a);

struct PassedEntry {
  SymNode node;
  Rank rank;
  bool expanded = false;
};

struct SearchResult {
  Answer answer = Answer::unreachable;
  SearchStats stats;
  std::vector<PassedEntry> passed;  // final passed store, insertion order
};

SearchResult check_reachability(Network const &net, StrategyConfig const &cfg);

}  // namespace tareach

#endif
