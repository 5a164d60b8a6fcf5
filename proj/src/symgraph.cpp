#include "tareach/symgraph.hpp"

#include <deque>
#include <unordered_set>

namespace tareach {

std::size_t SymNodeHash::operator()(SymNode const &n) const noexcept
{
  std::size_t h = ProductStateHash{}(n.state);
  for (Bound b : n.zone.entries())
    h = (h ^ static_cast<std::size_t>(b.raw())) * 0x100000001b3ULL;
  return h;
}

bool node_subsumes(SymNode const &big, SymNode const &small)
{
  return big.state == small.state && includes(big.zone, small.zone);
}

std::optional<Dbm> successor_zone(Dbm const &zone, ProductEdge const &edge)
{
  auto guarded = constrain_all(delay(zone), edge.guard);
  if (!guarded)
    return std::nullopt;
  return reset(std::move(*guarded), edge.resets);
}

ZoneGraph::ZoneGraph(Network const &net, std::optional<std::uint64_t> edge_shuffle_seed)
    : system_{net}, lu_{lu_bounds(net)}, shuffle_seed_{edge_shuffle_seed}
{
}

SymNode ZoneGraph::initial_node() const
{
  Network const &net = network();
  return SymNode{initial_state(net), extrapolate_lu_plus(initial_zone(net.clock_count()), lu_)};
}

std::vector<SymNode> ZoneGraph::successors(SymNode const &node) const
{
  std::vector<SymNode> out;
  for (ProductEdge &edge : system_.enabled_edges(node.state, shuffle_seed_)) {
    auto zone = successor_zone(node.zone, edge);
    if (!zone)
      continue;
    out.push_back(SymNode{std::move(edge.target), extrapolate_lu_plus(*zone, lu_)});
  }
  return out;
}

bool ZoneGraph::is_accepting(SymNode const &node) const { return tareach::is_accepting(network(), node.state); }

SymNode initial_node(Network const &net) { return ZoneGraph(net).initial_node(); }

std::vector<SymNode> successors(Network const &net, SymNode const &node) { return ZoneGraph(net).successors(node); }

OracleResult oracle_enumerate(Network const &net, std::size_t node_limit)
{
  ZoneGraph const graph(net);
  OracleResult result;
  std::unordered_set<SymNode, SymNodeHash> seen;
  std::deque<std::size_t> queue;

  auto discover = [&](SymNode node) {
    if (seen.contains(node))
      return;
    if (result.nodes.size() >= node_limit)
      throw OracleLimitExceeded("oracle node limit of " + std::to_string(node_limit) + " exceeded");
    seen.insert(node);
    result.nodes.push_back(std::move(node));
    queue.push_back(result.nodes.size() - 1);
  };

  discover(graph.initial_node());
  while (!queue.empty()) {
    std::size_t const idx = queue.front();
    queue.pop_front();
    if (graph.is_accepting(result.nodes[idx]))
      result.reachable = true;
    // result.nodes may reallocate inside discover(), so copy first
    SymNode const current = result.nodes[idx];
    for (SymNode &succ : graph.successors(current))
      discover(std::move(succ));
  }
  return result;
}

}  // namespace tareach
