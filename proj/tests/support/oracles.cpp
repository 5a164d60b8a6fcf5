#include "oracles.hpp"

#include <algorithm>
#include <string>

namespace tareach::testing {

namespace {

std::int64_t pick(Rng &rng, std::int64_t lo, std::int64_t hi)
{
  return std::uniform_int_distribution<std::int64_t>{lo, hi}(rng);
}

bool coin(Rng &rng, double p) { return std::bernoulli_distribution{p}(rng); }

std::vector<AtomicConstraint> random_guard(Rng &rng, std::size_t nclocks, std::int64_t max_constant)
{
  std::vector<AtomicConstraint> guard;
  auto const atoms = pick(rng, 0, 2);
  for (std::int64_t k = 0; k < atoms; ++k)
    guard.push_back(random_atom(rng, nclocks, max_constant));
  return guard;
}

std::vector<ClockId> random_resets(Rng &rng, std::size_t nclocks)
{
  std::vector<ClockId> resets;
  for (ClockId c = 1; c <= nclocks; ++c)
    if (coin(rng, 0.3))
      resets.push_back(c);
  return resets;
}

bool bound_holds(std::int64_t diff, Bound b, std::int64_t denominator)
{
  if (b.is_infinity())
    return true;
  std::int64_t const c = b.value() * denominator;
  return b.is_strict() ? diff < c : diff <= c;
}

}  // namespace

ClockConstraint random_atom(Rng &rng, std::size_t nclocks, std::int64_t max_constant)
{
  auto const clock = static_cast<ClockId>(pick(rng, 1, static_cast<std::int64_t>(nclocks)));
  auto const op = static_cast<CmpOp>(pick(rng, 0, 4));
  return {clock, op, pick(rng, 0, max_constant)};
}

Network random_network(Rng &rng, RandomModelLimits const &limits)
{
  Network net;
  net.name = "random";
  auto const nclocks = static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(limits.max_clocks)));
  for (std::size_t c = 0; c < nclocks; ++c)
    net.clocks.push_back(std::string(1, static_cast<char>('x' + c)));

  auto const nprocs = static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(limits.max_processes)));
  bool const none_accepting = coin(rng, 0.25);
  auto const per_process = static_cast<std::int64_t>(std::max<std::size_t>(1, limits.max_locations / nprocs));

  for (std::size_t p = 0; p < nprocs; ++p) {
    TimedAutomaton ta;
    ta.name = "P" + std::to_string(p);
    auto const nlocs = pick(rng, 1, per_process);
    for (std::int64_t l = 0; l < nlocs; ++l)
      ta.locations.push_back(Location{"l" + std::to_string(l), l == 0, !none_accepting && coin(rng, 0.35)});
    auto const nedges = pick(rng, 1, 2 * nlocs);
    for (std::int64_t e = 0; e < nedges; ++e) {
      Edge edge;
      edge.source = static_cast<LocationId>(pick(rng, 0, nlocs - 1));
      edge.target = static_cast<LocationId>(pick(rng, 0, nlocs - 1));
      edge.action = net.intern_action("a" + std::to_string(p) + "_" + std::to_string(e));
      edge.guard = random_guard(rng, nclocks, limits.max_constant);
      edge.resets = random_resets(rng, nclocks);
      ta.edges.push_back(std::move(edge));
    }
    net.processes.push_back(std::move(ta));
  }

  if (nprocs >= 2) {
    auto const nsync = pick(rng, 0, 2);
    for (std::int64_t k = 0; k < nsync; ++k) {
      ActionId const a = net.intern_action("s" + std::to_string(k));
      for (ProcessId p = 0; p < 2; ++p) {
        auto &ta = net.processes[p];
        auto const nlocs = static_cast<std::int64_t>(ta.locations.size());
        ta.edges.push_back(Edge{static_cast<LocationId>(pick(rng, 0, nlocs - 1)),
                                static_cast<LocationId>(pick(rng, 0, nlocs - 1)), a,
                                random_guard(rng, nclocks, limits.max_constant), random_resets(rng, nclocks)});
      }
      net.syncs.push_back(SyncPair{{0, a}, {1, a}});
    }
  }
  validate(net);
  return net;
}

Dbm random_zone(Rng &rng, std::size_t nclocks, std::int64_t max_constant)
{
  auto const dim = static_cast<std::int64_t>(nclocks + 1);
  for (;;) {
    Dbm d(nclocks + 1);
    auto const constraints = pick(rng, 0, 2 * dim);
    for (std::int64_t k = 0; k < constraints; ++k) {
      auto const i = static_cast<std::size_t>(pick(rng, 0, dim - 1));
      auto const j = static_cast<std::size_t>(pick(rng, 0, dim - 1));
      if (i == j)
        continue;
      Bound const b{pick(rng, -max_constant, max_constant), coin(rng, 0.5) ? Strictness::weak : Strictness::strict};
      d.at(i, j) = std::min(d.at(i, j), b);
    }
    if (auto c = canonicalize(d))
      return *c;
  }
}

Valuation random_valuation(Rng &rng, std::size_t nclocks, std::int64_t denominator, std::int64_t max_value)
{
  Valuation v{std::vector<std::int64_t>(nclocks + 1, 0), denominator};
  for (std::size_t c = 1; c <= nclocks; ++c)
    v.scaled[c] = pick(rng, 0, max_value * denominator);
  return v;
}

bool satisfies_entries(Valuation const &v, Dbm const &d)
{
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j)
      if (!bound_holds(v.scaled[i] - v.scaled[j], d.at(i, j), v.denominator))
        return false;
  return true;
}

bool satisfies(Valuation const &v, ClockConstraint const &atom)
{
  std::int64_t const x = v.scaled[atom.clock];
  std::int64_t const c = atom.constant * v.denominator;
  switch (atom.op) {
  case CmpOp::lt:
    return x < c;
  case CmpOp::le:
    return x <= c;
  case CmpOp::eq:
    return x == c;
  case CmpOp::ge:
    return x >= c;
  case CmpOp::gt:
    return x > c;
  }
  return false;
}

Valuation refine(Valuation const &v, std::int64_t factor)
{
  Valuation out{v.scaled, v.denominator * factor};
  for (auto &x : out.scaled)
    x *= factor;
  return out;
}

bool delay_witness(Valuation const &v, Dbm const &z)
{
  Valuation const fine = refine(v, 4);
  std::int64_t const most = *std::min_element(fine.scaled.begin() + 1, fine.scaled.end());
  for (std::int64_t d = 0; d <= most; ++d) {
    Valuation u = fine;
    for (std::size_t c = 1; c < u.scaled.size(); ++c)
      u.scaled[c] -= d;
    if (satisfies_entries(u, z))
      return true;
  }
  return false;
}

bool reset_witness(Valuation const &v, Dbm const &z, std::vector<ClockId> const &clocks)
{
  for (ClockId c : clocks)
    if (v.scaled[c] != 0)
      return false;
  // Difference constraints with k free clocks and bounds on the grid 1/den
  // have a solution on the grid 1/(den*(k+1)) whenever they have one.
  std::int64_t const factor = static_cast<std::int64_t>(clocks.size()) + 1;
  Valuation u = refine(v, factor);
  std::int64_t biggest = 0;
  for (Bound b : z.entries())
    if (!b.is_infinity())
      biggest = std::max(biggest, b.value() < 0 ? -b.value() : b.value());
  std::int64_t const top = (*std::max_element(v.scaled.begin(), v.scaled.end()) + (biggest + 1) * v.denominator) * factor;

  std::vector<std::int64_t> digits(clocks.size(), 0);
  for (;;) {
    for (std::size_t k = 0; k < clocks.size(); ++k)
      u.scaled[clocks[k]] = digits[k];
    if (satisfies_entries(u, z))
      return true;
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == top)
      digits[k++] = 0;
    if (k == digits.size())
      return false;
    ++digits[k];
  }
}

Dbm extra_lu_plus_rules(Dbm const &d, LUBounds const &lu)
{
  auto exceeds = [&](std::size_t x, std::int64_t b) { return b == kNoBound || d.at(0, x) < Bound::le(-b); };
  Dbm out = d;
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) {
      if (i == j)
        continue;
      if (i != 0) {
        std::int64_t const l = lu.lower[i];
        if (l == kNoBound || d.at(i, j) > Bound::le(l) || exceeds(i, l) || (j != 0 && exceeds(j, lu.upper[j])))
          out.at(i, j) = Bound::infinity();
      } else if (exceeds(j, lu.upper[j])) {
        out.at(i, j) = lu.upper[j] == kNoBound ? Bound::infinity() : Bound::lt(-lu.upper[j]);
      }
    }
  return out;
}

}  // namespace tareach::testing
