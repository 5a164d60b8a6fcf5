#include "tareach/bench/generators.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace tareach::bench {

namespace {

// Small builder that interns actions in edge order, the same order the
// text parser uses, so generated and re-parsed networks compare equal.
class Builder {
public:
  explicit Builder(std::string name) { net_.name = std::move(name); }

  ClockId clock(std::string name)
  {
    net_.clocks.push_back(std::move(name));
    return static_cast<ClockId>(net_.clocks.size());
  }

  ProcessId process(std::string name)
  {
    net_.processes.push_back(TimedAutomaton{std::move(name), {}, {}});
    return static_cast<ProcessId>(net_.processes.size() - 1);
  }

  LocationId location(ProcessId p, std::string name, bool initial = false, bool accepting = false)
  {
    auto &locs = net_.processes[p].locations;
    locs.push_back(Location{std::move(name), initial, accepting});
    return static_cast<LocationId>(locs.size() - 1);
  }

  void edge(ProcessId p, LocationId src, LocationId dst, std::string const &action,
            std::vector<AtomicConstraint> guard = {}, std::vector<ClockId> resets = {})
  {
    net_.processes[p].edges.push_back(Edge{src, dst, net_.intern_action(action), std::move(guard), std::move(resets)});
  }

  void sync(ProcessId p1, std::string const &a1, ProcessId p2, std::string const &a2)
  {
    net_.syncs.push_back(SyncPair{{p1, *net_.find_action(a1)}, {p2, *net_.find_action(a2)}});
  }

  Network finish()
  {
    validate(net_);
    return std::move(net_);
  }

private:
  Network net_;
};

std::size_t parse_count(std::string_view spec, std::string_view text)
{
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad size in model spec '" + std::string(spec) + "'");
  return n;
}

}  // namespace

Network generate_racing()
{
  Builder b("racing");
  ClockId const y = b.clock("y");
  ProcessId const p = b.process("A");
  LocationId const q1 = b.location(p, "q1", true);
  LocationId const q2 = b.location(p, "q2");
  LocationId const q3 = b.location(p, "q3");
  LocationId const q4 = b.location(p, "q4");
  b.edge(p, q1, q2, "a");
  b.edge(p, q2, q3, "b");
  b.edge(p, q1, q3, "c", {{y, CmpOp::gt, 1}});
  b.edge(p, q3, q4, "d", {{y, CmpOp::le, 5}});
  b.edge(p, q4, q1, "e", {}, {y});
  return b.finish();
}

Network generate_blowup(std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("blowup size must be at least 1");
  Builder b("blowup" + std::to_string(n));
  std::vector<ClockId> x;
  for (std::size_t i = 1; i <= n; ++i)
    x.push_back(b.clock("x" + std::to_string(i)));
  ProcessId const p = b.process("B");
  std::vector<LocationId> q{0};  // q[k] is q_k, 1-based
  for (std::size_t k = 1; k <= 2 * n + 1; ++k)
    q.push_back(b.location(p, "q" + std::to_string(k), k == 1));
  LocationId const qf = b.location(p, "qf", false, true);

  // x_i is reset when segment i is entered. The short edge leaves without
  // letting time pass, so every short segment pins x_i = x_{i+1} while a
  // long one only gives x_i >= x_{i+1}.
  for (std::size_t i = 1; i <= n; ++i) {
    ClockId const xi = x[i - 1];
    std::vector<ClockId> next;
    if (i < n)
      next.push_back(x[i]);
    b.edge(p, q[2 * i - 1], q[2 * i + 1], "short", {{xi, CmpOp::eq, 0}}, next);
    b.edge(p, q[2 * i - 1], q[2 * i], "enter");
    b.edge(p, q[2 * i], q[2 * i + 1], "leave", {}, next);
  }
  b.edge(p, q[2 * n + 1], qf, "final", {{x[0], CmpOp::lt, 0}});
  return b.finish();
}

Network generate_fischer(std::size_t n, bool weakened)
{
  if (n < 2)
    throw std::invalid_argument("fischer needs at least 2 processes");
  Builder b((weakened ? "fischer_weak" : "fischer") + std::to_string(n));
  std::vector<ClockId> x;
  for (std::size_t i = 1; i <= n; ++i)
    x.push_back(b.clock("x" + std::to_string(i)));

  std::vector<ProcessId> procs;
  for (std::size_t i = 1; i <= n; ++i) {
    ProcessId const p = b.process("P" + std::to_string(i));
    procs.push_back(p);
    bool const critical_accepts = i <= 2;
    LocationId const a = b.location(p, "A", true, !critical_accepts);
    LocationId const req = b.location(p, "req", false, !critical_accepts);
    LocationId const wait = b.location(p, "wait", false, !critical_accepts);
    LocationId const cs = b.location(p, "cs", false, true);
    ClockId const xi = x[i - 1];
    b.edge(p, a, req, "try", {}, {xi});
    b.edge(p, req, wait, "set", {{xi, CmpOp::le, 1}}, {xi});
    b.edge(p, wait, req, "retry", {}, {xi});
    b.edge(p, wait, cs, "enter", {weakened ? AtomicConstraint{xi, CmpOp::ge, 0} : AtomicConstraint{xi, CmpOp::gt, 2}});
    b.edge(p, cs, a, "exit");
  }

  ProcessId const id = b.process("id");
  std::vector<LocationId> value;
  for (std::size_t k = 0; k <= n; ++k)
    value.push_back(b.location(id, "id" + std::to_string(k), k == 0, true));
  for (std::size_t i = 1; i <= n; ++i) {
    std::string const s = std::to_string(i);
    b.edge(id, value[0], value[0], "zero_" + s);
    for (std::size_t k = 0; k <= n; ++k)
      b.edge(id, value[k], value[i], "set_" + s);
    b.edge(id, value[i], value[i], "is_" + s);
    for (std::size_t k = 0; k <= n; ++k)
      b.edge(id, value[k], value[0], "reset_" + s);
  }

  for (std::size_t i = 1; i <= n; ++i) {
    std::string const s = std::to_string(i);
    ProcessId const p = procs[i - 1];
    b.sync(p, "try", id, "zero_" + s);
    b.sync(p, "retry", id, "zero_" + s);
    b.sync(p, "set", id, "set_" + s);
    b.sync(p, "enter", id, "is_" + s);
    b.sync(p, "exit", id, "reset_" + s);
  }
  return b.finish();
}

Network generate(std::string_view spec)
{
  auto const colon = spec.find(':');
  std::string_view const name = spec.substr(0, colon);
  if (name == "racing") {
    if (colon != std::string_view::npos)
      throw std::invalid_argument("racing takes no size");
    return generate_racing();
  }
  if (colon == std::string_view::npos)
    throw std::invalid_argument("model spec '" + std::string(spec) + "' needs a size, e.g. blowup:4");
  std::size_t const n = parse_count(spec, spec.substr(colon + 1));
  if (name == "blowup")
    return generate_blowup(n);
  if (name == "fischer")
    return generate_fischer(n);
  if (name == "fischer-weak")
    return generate_fischer(n, true);
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

}  // namespace tareach::bench
