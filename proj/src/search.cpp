#include "tareach/search.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace tareach {

std::string_view to_string(Strategy s)
{
  switch (s) {
  case Strategy::bfs:
    return "bfs";
  case Strategy::dfs:
    return "dfs";
  case Strategy::rank_bfs:
    return "r-bfs";
  case Strategy::waiting:
    return "w-bfs";
  case Strategy::tw_bfs:
    return "tw-bfs";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name)
{
  if (name == "bfs")
    return Strategy::bfs;
  if (name == "dfs")
    return Strategy::dfs;
  if (name == "r-bfs" || name == "rank_bfs" || name == "rank-bfs")
    return Strategy::rank_bfs;
  if (name == "w-bfs" || name == "waiting")
    return Strategy::waiting;
  if (name == "tw-bfs" || name == "tw_bfs")
    return Strategy::tw_bfs;
  return std::nullopt;
}

std::string_view to_string(Answer a) { return a == Answer::reachable ? "reachable" : "unreachable"; }

Rank init_rank(SymNode const &node) { return is_true_zone(node.zone) ? Rank::infinity() : Rank{0}; }

// ---------------------------------------------------------------------------
// PassedTree

PassedTree::PassedTree(bool link) : link_{link}
{
  StoredNode root{SymNode{ProductState{}, Dbm(1)}, Rank{}};
  nodes_.push_back(std::move(root));
}

NodeId PassedTree::add(SymNode node, Rank rank, NodeId parent)
{
  NodeId const id = static_cast<NodeId>(nodes_.size());
  StoredNode stored{std::move(node), rank};
  stored.in_waiting = true;
  stored.true_zone = is_true_zone(stored.node.zone);
  if (link_) {
    while (parent != root() && !nodes_[parent].alive)
      parent = nodes_[parent].parent;
    stored.parent = parent;
    stored.prev_sibling = nodes_[parent].last_child;
  }
  nodes_.push_back(std::move(stored));
  if (link_) {
    StoredNode &p = nodes_[nodes_[id].parent];
    if (p.last_child == kNoNode)
      p.first_child = id;
    else
      nodes_[p.last_child].next_sibling = id;
    p.last_child = id;
  }
  ++alive_;
  return id;
}

void PassedTree::splice_remove(NodeId id)
{
  StoredNode &n = nodes_[id];
  n.alive = false;
  n.in_waiting = false;
  --alive_;
  if (!link_)
    return;

  NodeId const parent = n.parent;
  StoredNode &p = nodes_[parent];
  for (NodeId c = n.first_child; c != kNoNode; c = nodes_[c].next_sibling)
    nodes_[c].parent = parent;

  NodeId const first = n.first_child != kNoNode ? n.first_child : n.next_sibling;
  NodeId const last = n.first_child != kNoNode ? n.last_child : n.prev_sibling;
  if (n.first_child != kNoNode) {
    nodes_[first].prev_sibling = n.prev_sibling;
    nodes_[last].next_sibling = n.next_sibling;
  }
  if (n.prev_sibling != kNoNode)
    nodes_[n.prev_sibling].next_sibling = first;
  else
    p.first_child = first;
  if (n.next_sibling != kNoNode)
    nodes_[n.next_sibling].prev_sibling = last;
  else
    p.last_child = last;

  // keep n.parent: later additions below a removed node climb through it
  n.first_child = n.last_child = n.prev_sibling = n.next_sibling = kNoNode;
}

Rank PassedTree::max_rank_waiting(NodeId id, std::uint64_t &touched) const
{
  Rank best{0};
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    NodeId const x = stack.back();
    stack.pop_back();
    ++touched;
    StoredNode const &n = nodes_[x];
    if (n.in_waiting) {
      best = std::max(best, n.rank);
      continue;
    }
    for (NodeId c = n.first_child; c != kNoNode; c = nodes_[c].next_sibling)
      stack.push_back(c);
  }
  return best;
}

std::vector<NodeId> PassedTree::children(NodeId id) const
{
  std::vector<NodeId> out;
  for (NodeId c = nodes_[id].first_child; c != kNoNode; c = nodes_[c].next_sibling)
    out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// Waiting list

WaitKey wait_key(Strategy s, Rank rank, bool true_zone, LinearKey const &topo, std::uint64_t seq)
{
  switch (s) {
  case Strategy::bfs:
    return {0, {}, seq};
  case Strategy::dfs:
    return {0, {}, std::numeric_limits<std::uint64_t>::max() - seq};
  case Strategy::rank_bfs:
    // highest rank first: infinity maps to tier 0
    return {rank.is_infinite() ? 0 : std::numeric_limits<std::uint64_t>::max() - rank.value(), {}, seq};
  case Strategy::waiting:
    return {0, topo, seq};
  case Strategy::tw_bfs:
    if (true_zone)
      return {0, {}, seq};
    return {1, topo, seq};
  }
  return {};
}

void WaitingList::push(PassedTree const &tree, NodeId id)
{
  StoredNode const &n = tree[id];
  LinearKey topo;
  if ((strategy_ == Strategy::waiting || strategy_ == Strategy::tw_bfs) && order_ != nullptr)
    topo = linear_key(*order_, n.node.state);
  heap_.push(Entry{wait_key(strategy_, n.rank, n.true_zone, topo, seq_++), id});
}

std::optional<NodeId> WaitingList::pop(PassedTree const &tree)
{
  while (!heap_.empty()) {
    NodeId const id = heap_.top().id;
    heap_.pop();
    if (tree[id].alive && tree[id].in_waiting)
      return id;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exploration

namespace {

class Explorer {
public:
  Explorer(Network const &net, StrategyConfig const &cfg)
      : cfg_{cfg}, graph_{net, cfg.edge_shuffle_seed}, tree_{cfg.strategy == Strategy::rank_bfs},
        waiting_{cfg.strategy, nullptr}
  {
    if (cfg.strategy == Strategy::waiting || cfg.strategy == Strategy::tw_bfs) {
      order_ = cfg.order ? *cfg.order : make_joint_order(net, cfg.order_shuffle_seed);
      if (order_.per_process.size() != net.processes.size())
        throw std::invalid_argument("joint order does not match the network");
      waiting_ = WaitingList{cfg.strategy, &order_};
    }
  }

  SearchResult run()
  {
    SearchResult result;
    insert(graph_.initial_node(), tree_.root());

    while (auto popped = waiting_.pop(tree_)) {
      NodeId const id = *popped;
      if (cfg_.audit)
        audit_pop(id);
      StoredNode &current = tree_[id];
      current.in_waiting = false;
      current.expanded = true;
      ++stats_.visited;
      if (graph_.is_accepting(current.node)) {
        result.answer = Answer::reachable;
        break;
      }
      std::vector<SymNode> succs = graph_.successors(current.node);
      for (SymNode &succ : succs)
        explore_successor(std::move(succ), id);
      if (cfg_.audit)
        audit_step();
    }

    stats_.stored_final = tree_.alive_count();
    result.stats = stats_;
    for (NodeId id = 1; id < tree_.capacity(); ++id)
      if (tree_[id].alive)
        result.passed.push_back({tree_[id].node, tree_[id].rank, tree_[id].expanded});
    return result;
  }

private:
  void explore_successor(SymNode succ, NodeId parent)
  {
    auto &bucket = passed_[succ.state];
    for (NodeId b : bucket)
      if (includes(tree_[b].node.zone, succ.zone))
        return;

    Rank rank = init_rank(succ);
    // Collect first: removal edits the bucket.
    std::vector<NodeId> covered;
    for (NodeId s : bucket)
      if (includes(succ.zone, tree_[s].node.zone))
        covered.push_back(s);
    for (NodeId s : covered) {
      if (cfg_.strategy == Strategy::rank_bfs && !tree_[s].in_waiting)
        rank = std::max(rank, tree_.max_rank_waiting(s, stats_.visited_ranking).next());
      remove(s, bucket);
    }
    insert(std::move(succ), parent, rank);
  }

  void insert(SymNode node, NodeId parent)
  {
    Rank const rank = init_rank(node);
    insert(std::move(node), parent, rank);
  }

  void insert(SymNode node, NodeId parent, Rank rank)
  {
    ProductState state = node.state;
    NodeId const id = tree_.add(std::move(node), rank, parent);
    passed_[std::move(state)].push_back(id);
    waiting_.push(tree_, id);
    stats_.stored_max = std::max<std::uint64_t>(stats_.stored_max, tree_.alive_count());
  }

  void remove(NodeId id, std::vector<NodeId> &bucket)
  {
    if (tree_[id].expanded)
      ++stats_.mistakes;
    tree_.splice_remove(id);
    bucket.erase(std::find(bucket.begin(), bucket.end(), id));
  }

  [[noreturn]] void fail(std::string const &what) const
  {
    throw AuditFailure(std::string(to_string(cfg_.strategy)) + ": " + what);
  }

  void audit_pop(NodeId popped) const
  {
    if (cfg_.strategy != Strategy::rank_bfs)
      return;
    for (NodeId id = 1; id < tree_.capacity(); ++id)
      if (tree_[id].alive && tree_[id].in_waiting && tree_[id].rank > tree_[popped].rank)
        fail("popped node does not carry the highest waiting rank");
  }

  void audit_step() const
  {
    std::size_t alive = 0;
    for (NodeId id = 1; id < tree_.capacity(); ++id) {
      StoredNode const &n = tree_[id];
      if (!n.alive) {
        if (n.in_waiting)
          fail("removed node still waiting");
        continue;
      }
      ++alive;
      if (!n.in_waiting && !n.expanded)
        fail("stored node neither waiting nor expanded");
      if (cfg_.strategy != Strategy::rank_bfs)
        continue;
      if (n.true_zone && !n.rank.is_infinite())
        fail("true-zone node without infinite rank");
      if (n.in_waiting && !tree_.is_leaf(id))
        fail("waiting node is not a leaf of the passed tree");
      if (n.parent != tree_.root() && !tree_[n.parent].alive)
        fail("stored node hangs below a removed node");
    }
    if (alive != tree_.alive_count())
      fail("passed store size mismatch");

    std::size_t in_buckets = 0;
    for (auto const &[state, bucket] : passed_) {
      in_buckets += bucket.size();
      for (NodeId a : bucket)
        for (NodeId b : bucket)
          if (a != b && includes(tree_[a].node.zone, tree_[b].node.zone))
            fail("passed store is not an antichain");
    }
    if (in_buckets != alive)
      fail("passed buckets out of sync");

    if (cfg_.strategy == Strategy::rank_bfs) {
      // every alive node is reachable from the virtual root
      std::size_t reached = 0;
      std::vector<NodeId> stack{tree_.root()};
      while (!stack.empty()) {
        NodeId const x = stack.back();
        stack.pop_back();
        for (NodeId c : tree_.children(x)) {
          ++reached;
          stack.push_back(c);
        }
      }
      if (reached != alive)
        fail("passed tree does not reach every stored node");
    }
  }

  StrategyConfig const &cfg_;
  ZoneGraph graph_;
  PassedTree tree_;
  JointOrder order_;
  WaitingList waiting_;
  std::unordered_map<ProductState, std::vector<NodeId>, ProductStateHash> passed_;
  SearchStats stats_;
};

}  // namespace

SearchResult check_reachability(Network const &net, StrategyConfig const &cfg)
{
  return Explorer(net, cfg).run();
}

}  // namespace tareach
