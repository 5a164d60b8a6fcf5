#include "tareach/automaton.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace tareach {

namespace {

template <class Range>
auto find_index(Range const &r, std::string_view name) -> std::optional<std::uint32_t>
{
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] == name)
      return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v)
{
  // splitmix64 finalizer over a running combination
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

}  // namespace

LocationId TimedAutomaton::initial_location() const
{
  for (std::size_t i = 0; i < locations.size(); ++i)
    if (locations[i].initial)
      return static_cast<LocationId>(i);
  throw ModelError("process " + name + " has no initial location");
}

std::optional<LocationId> TimedAutomaton::find_location(std::string_view n) const
{
  for (std::size_t i = 0; i < locations.size(); ++i)
    if (locations[i].name == n)
      return static_cast<LocationId>(i);
  return std::nullopt;
}

std::optional<ClockId> Network::find_clock(std::string_view n) const
{
  auto idx = find_index(clocks, n);
  if (!idx)
    return std::nullopt;
  return *idx + 1;
}

std::optional<ActionId> Network::find_action(std::string_view n) const { return find_index(actions, n); }

std::optional<ProcessId> Network::find_process(std::string_view n) const
{
  for (std::size_t i = 0; i < processes.size(); ++i)
    if (processes[i].name == n)
      return static_cast<ProcessId>(i);
  return std::nullopt;
}

ActionId Network::intern_action(std::string const &n)
{
  if (auto id = find_action(n))
    return *id;
  actions.push_back(n);
  return static_cast<ActionId>(actions.size() - 1);
}

void validate(Network const &net)
{
  if (net.processes.empty())
    throw ModelError("network has no process");
  std::set<std::string_view> names;
  for (auto const &c : net.clocks)
    if (!names.insert(c).second)
      throw ModelError("duplicate clock " + c);
  names.clear();
  for (auto const &p : net.processes) {
    if (!names.insert(p.name).second)
      throw ModelError("duplicate process " + p.name);
    std::set<std::string_view> locs;
    std::size_t initials = 0;
    for (auto const &l : p.locations) {
      if (!locs.insert(l.name).second)
        throw ModelError("duplicate location " + l.name + " in process " + p.name);
      initials += l.initial ? 1 : 0;
    }
    if (initials == 0)
      throw ModelError("process " + p.name + " has no initial location");
    if (initials > 1)
      throw ModelError("process " + p.name + " has more than one initial location");
    for (auto const &e : p.edges) {
      if (e.source >= p.locations.size() || e.target >= p.locations.size())
        throw ModelError("edge with unknown location in process " + p.name);
      if (e.action >= net.actions.size())
        throw ModelError("edge with unknown action in process " + p.name);
      for (auto const &a : e.guard)
        if (a.clock == kReferenceClock || a.clock > net.clock_count())
          throw ModelError("guard on unknown clock in process " + p.name);
      for (ClockId x : e.resets)
        if (x == kReferenceClock || x > net.clock_count())
          throw ModelError("reset of unknown clock in process " + p.name);
    }
  }
  auto uses = [&net](SyncEndpoint const &ep) {
    auto const &edges = net.processes[ep.process].edges;
    return std::any_of(edges.begin(), edges.end(), [&](Edge const &e) { return e.action == ep.action; });
  };
  for (auto const &s : net.syncs) {
    if (s.first.process >= net.processes.size() || s.second.process >= net.processes.size())
      throw ModelError("sync references unknown process");
    if (s.first.process == s.second.process)
      throw ModelError("sync pair within one process " + net.processes[s.first.process].name);
    if (s.first.action >= net.actions.size() || s.second.action >= net.actions.size())
      throw ModelError("sync references unknown action");
    for (auto const &ep : {s.first, s.second})
      if (!uses(ep))
        throw ModelError("action " + net.actions[ep.action] + " is not in the alphabet of process "
                         + net.processes[ep.process].name);
  }
}

std::size_t ProductStateHash::operator()(ProductState const &s) const noexcept
{
  std::uint64_t h = s.components.size();
  for (LocationId l : s.components)
    h = mix(h, l);
  return static_cast<std::size_t>(h);
}

ProductState initial_state(Network const &net)
{
  ProductState s;
  s.components.reserve(net.processes.size());
  for (auto const &p : net.processes)
    s.components.push_back(p.initial_location());
  return s;
}

bool is_accepting(Network const &net, ProductState const &s)
{
  for (std::size_t i = 0; i < s.components.size(); ++i)
    if (!net.processes[i].locations[s.components[i]].accepting)
      return false;
  return true;
}

LUBounds lu_bounds(Network const &net)
{
  LUBounds lu(net.clock_count());
  for (auto const &p : net.processes)
    for (auto const &e : p.edges)
      for (auto const &a : e.guard) {
        if (a.op == CmpOp::gt || a.op == CmpOp::ge || a.op == CmpOp::eq)
          lu.lower[a.clock] = std::max(lu.lower[a.clock], a.constant);
        if (a.op == CmpOp::lt || a.op == CmpOp::le || a.op == CmpOp::eq)
          lu.upper[a.clock] = std::max(lu.upper[a.clock], a.constant);
      }
  return lu;
}

ProductSystem::ProductSystem(Network const &net) : net_{&net}
{
  validate(net);
  for (std::size_t p = 0; p < net.processes.size(); ++p) {
    auto const &proc = net.processes[p];
    auto &out = outgoing_.emplace_back(proc.locations.size());
    auto &sync = is_sync_edge_.emplace_back(proc.edges.size(), false);
    for (std::size_t e = 0; e < proc.edges.size(); ++e) {
      out[proc.edges[e].source].push_back(static_cast<std::uint32_t>(e));
      for (auto const &s : net.syncs)
        for (auto const &ep : {s.first, s.second})
          if (ep.process == p && ep.action == proc.edges[e].action)
            sync[e] = true;
    }
  }
}

std::vector<ProductEdge> ProductSystem::enabled_edges(ProductState const &s,
                                                      std::optional<std::uint64_t> shuffle_seed) const
{
  Network const &net = *net_;
  std::vector<ProductEdge> result;

  for (std::size_t p = 0; p < net.processes.size(); ++p) {
    auto const &proc = net.processes[p];
    for (std::uint32_t e : outgoing_[p][s.components[p]]) {
      if (is_sync_edge_[p][e])
        continue;
      Edge const &edge = proc.edges[e];
      ProductEdge pe{edge.guard, edge.resets, proc.name + "." + net.actions[edge.action], s};
      pe.target.components[p] = edge.target;
      result.push_back(std::move(pe));
    }
  }

  for (auto const &sync : net.syncs) {
    auto const p1 = sync.first.process;
    auto const p2 = sync.second.process;
    auto const &proc1 = net.processes[p1];
    auto const &proc2 = net.processes[p2];
    for (std::uint32_t e1 : outgoing_[p1][s.components[p1]]) {
      Edge const &a = proc1.edges[e1];
      if (a.action != sync.first.action)
        continue;
      for (std::uint32_t e2 : outgoing_[p2][s.components[p2]]) {
        Edge const &b = proc2.edges[e2];
        if (b.action != sync.second.action)
          continue;
        ProductEdge pe{a.guard, a.resets,
                       proc1.name + "@" + net.actions[a.action] + "|" + proc2.name + "@" + net.actions[b.action], s};
        pe.guard.insert(pe.guard.end(), b.guard.begin(), b.guard.end());
        for (ClockId x : b.resets)
          if (std::find(pe.resets.begin(), pe.resets.end(), x) == pe.resets.end())
            pe.resets.push_back(x);
        pe.target.components[p1] = a.target;
        pe.target.components[p2] = b.target;
        result.push_back(std::move(pe));
      }
    }
  }

  if (shuffle_seed && result.size() > 1) {
    std::mt19937_64 rng(mix(*shuffle_seed, ProductStateHash{}(s)));
    std::shuffle(result.begin(), result.end(), rng);
  }
  return result;
}

std::vector<ProductEdge> enabled_product_edges(Network const &net, ProductState const &s,
                                               std::optional<std::uint64_t> shuffle_seed)
{
  return ProductSystem(net).enabled_edges(s, shuffle_seed);
}

std::string state_name(Network const &net, ProductState const &s)
{
  std::string out = "<";
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (i)
      out += ",";
    out += net.processes[i].locations[s.components[i]].name;
  }
  return out + ">";
}

}  // namespace tareach
