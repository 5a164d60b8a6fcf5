#include "tareach/order.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace tareach {

TopoOrder extract_dag_order(TimedAutomaton const &p, std::optional<std::uint64_t> shuffle_seed)
{
  std::size_t const nloc = p.locations.size();
  std::vector<std::vector<std::uint32_t>> children(nloc);
  for (std::size_t e = 0; e < p.edges.size(); ++e)
    children[p.edges[e].source].push_back(static_cast<std::uint32_t>(e));
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    for (auto &c : children)
      std::shuffle(c.begin(), c.end(), rng);
  }

  enum class Mark : std::uint8_t { fresh, on_stack, done };
  std::vector<Mark> mark(nloc, Mark::fresh);
  TopoOrder order;
  order.kept_edge.assign(p.edges.size(), true);
  std::vector<std::uint32_t> postorder;

  struct Frame {
    LocationId loc;
    std::size_t next_child;
  };
  std::vector<Frame> stack;
  LocationId const root = p.initial_location();
  mark[root] = Mark::on_stack;
  stack.push_back({root, 0});
  while (!stack.empty()) {
    Frame &top = stack.back();
    if (top.next_child == children[top.loc].size()) {
      mark[top.loc] = Mark::done;
      postorder.push_back(top.loc);
      stack.pop_back();
      continue;
    }
    std::uint32_t const e = children[top.loc][top.next_child++];
    LocationId const target = p.edges[e].target;
    if (mark[target] == Mark::on_stack) {
      order.kept_edge[e] = false;
    }
    else if (mark[target] == Mark::fresh) {
      mark[target] = Mark::on_stack;
      stack.push_back({target, 0});
    }
  }

  order.index.assign(nloc, 0);
  std::uint32_t next = 0;
  for (auto it = postorder.rbegin(); it != postorder.rend(); ++it)
    order.index[*it] = next++;
  for (std::size_t l = 0; l < nloc; ++l)
    if (mark[l] == Mark::fresh)
      order.index[l] = next++;
  // edges out of unreached locations are not part of the DFS graph
  for (std::size_t e = 0; e < p.edges.size(); ++e)
    if (mark[p.edges[e].source] == Mark::fresh)
      order.kept_edge[e] = false;
  return order;
}

JointOrder make_joint_order(Network const &net, std::optional<std::uint64_t> shuffle_seed)
{
  JointOrder j;
  for (std::size_t p = 0; p < net.processes.size(); ++p) {
    std::optional<std::uint64_t> seed;
    if (shuffle_seed)
      seed = *shuffle_seed + p;
    j.per_process.push_back(extract_dag_order(net.processes[p], seed));
  }
  return j;
}

JointRelation joint_compare(JointOrder const &j, ProductState const &a, ProductState const &b)
{
  bool some_less = false;
  bool some_greater = false;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    auto const ia = j.per_process[i].index[a.components[i]];
    auto const ib = j.per_process[i].index[b.components[i]];
    some_less |= ia < ib;
    some_greater |= ia > ib;
  }
  if (some_less && some_greater)
    return JointRelation::incomparable;
  if (some_less)
    return JointRelation::less;
  if (some_greater)
    return JointRelation::greater;
  return JointRelation::equal;
}

LinearKey linear_key(JointOrder const &j, ProductState const &s)
{
  LinearKey key;
  key.indices.reserve(s.components.size());
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    auto const idx = j.per_process[i].index[s.components[i]];
    key.indices.push_back(idx);
    key.sum += idx;
  }
  return key;
}

std::string dump_order(Network const &net, JointOrder const &j)
{
  std::ostringstream os;
  for (std::size_t p = 0; p < net.processes.size(); ++p) {
    auto const &proc = net.processes[p];
    std::vector<std::uint32_t> locs(proc.locations.size());
    std::iota(locs.begin(), locs.end(), 0);
    std::sort(locs.begin(), locs.end(),
              [&](auto a, auto b) { return j.per_process[p].index[a] < j.per_process[p].index[b]; });
    os << proc.name << ":";
    for (auto l : locs)
      os << " " << proc.locations[l].name;
    os << "\n";
  }
  return os.str();
}

}  // namespace tareach
