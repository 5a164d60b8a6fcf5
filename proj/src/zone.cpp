#include "tareach/zone.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace tareach {

std::string to_string(Bound b)
{
  if (b.is_infinity())
    return "<inf";
  return (b.is_strict() ? "<" : "<=") + std::to_string(b.value());
}

std::string_view to_string(CmpOp op)
{
  switch (op) {
  case CmpOp::lt:
    return "<";
  case CmpOp::le:
    return "<=";
  case CmpOp::eq:
    return "=";
  case CmpOp::ge:
    return ">=";
  case CmpOp::gt:
    return ">";
  }
  return "?";
}

Dbm::Dbm(std::size_t dim) : dim_{dim}, entries_(dim * dim, Bound::infinity())
{
  if (dim == 0)
    throw std::invalid_argument("Dbm dimension must be positive");
  for (std::size_t i = 0; i < dim; ++i) {
    at(i, i) = Bound::le_zero();
    at(0, i) = Bound::le_zero();
  }
}

namespace {

// Floyd-Warshall in place. Returns false on a negative cycle.
bool close(Dbm &d)
{
  std::size_t const n = d.dim();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Bound const dik = d.at(i, k);
      if (dik.is_infinity())
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        Bound const via = dik + d.at(k, j);
        if (via < d.at(i, j))
          d.at(i, j) = via;
      }
    }
    if (d.at(k, k) < Bound::le_zero())
      return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (d.at(i, i) < Bound::le_zero())
      return false;
  return true;
}

// Tighten x_i - x_j by b on a canonical matrix and restore canonicity in
// O(n^2). Returns false if the result is empty.
bool tighten(Dbm &d, std::size_t i, std::size_t j, Bound b)
{
  if (!(b < d.at(i, j)))
    return true;
  if (b + d.at(j, i) < Bound::le_zero())
    return false;
  d.at(i, j) = b;
  std::size_t const n = d.dim();
  for (std::size_t a = 0; a < n; ++a) {
    Bound const ai = d.at(a, i);
    if (ai.is_infinity())
      continue;
    Bound const aij = ai + b;
    for (std::size_t c = 0; c < n; ++c) {
      Bound const via = aij + d.at(j, c);
      if (via < d.at(a, c))
        d.at(a, c) = via;
    }
  }
  return true;
}

void check_constant(std::int64_t c)
{
  if (c < 0 || c > kMaxConstant)
    throw std::out_of_range("guard constant out of range: " + std::to_string(c));
}

}  // namespace

std::optional<Dbm> canonicalize(Dbm d)
{
  for (std::size_t i = 0; i < d.dim(); ++i) {
    d.at(i, i) = std::min(d.at(i, i), Bound::le_zero());
    d.at(0, i) = std::min(d.at(0, i), Bound::le_zero());
  }
  if (!close(d))
    return std::nullopt;
  return d;
}

Dbm initial_zone(std::size_t nclocks)
{
  Dbm d(nclocks + 1);
  for (std::size_t i = 1; i <= nclocks; ++i)
    for (std::size_t j = 1; j <= nclocks; ++j)
      d.at(i, j) = Bound::le_zero();
  return d;
}

std::optional<Dbm> constrain(Dbm d, ClockConstraint const &atom)
{
  if (atom.clock == kReferenceClock || atom.clock >= d.dim())
    throw std::out_of_range("unknown clock index " + std::to_string(atom.clock));
  check_constant(atom.constant);
  std::size_t const x = atom.clock;
  std::int64_t const c = atom.constant;
  bool ok = true;
  switch (atom.op) {
  case CmpOp::lt:
    ok = tighten(d, x, 0, Bound::lt(c));
    break;
  case CmpOp::le:
    ok = tighten(d, x, 0, Bound::le(c));
    break;
  case CmpOp::eq:
    ok = tighten(d, x, 0, Bound::le(c)) && tighten(d, 0, x, Bound::le(-c));
    break;
  case CmpOp::ge:
    ok = tighten(d, 0, x, Bound::le(-c));
    break;
  case CmpOp::gt:
    ok = tighten(d, 0, x, Bound::lt(-c));
    break;
  }
  if (!ok)
    return std::nullopt;
  return d;
}

std::optional<Dbm> constrain_all(Dbm d, std::span<ClockConstraint const> guard)
{
  for (ClockConstraint const &atom : guard) {
    auto next = constrain(std::move(d), atom);
    if (!next)
      return std::nullopt;
    d = std::move(*next);
  }
  return d;
}

Dbm reset(Dbm d, std::span<ClockId const> clocks)
{
  std::size_t const n = d.dim();
  for (ClockId x : clocks) {
    if (x == kReferenceClock || x >= n)
      throw std::out_of_range("unknown clock index " + std::to_string(x));
    for (std::size_t k = 0; k < n; ++k) {
      d.at(x, k) = d.at(0, k);
      d.at(k, x) = d.at(k, 0);
    }
    d.at(x, x) = Bound::le_zero();
  }
  return d;
}

Dbm delay(Dbm d)
{
  for (std::size_t i = 1; i < d.dim(); ++i)
    d.at(i, 0) = Bound::infinity();
  return d;
}

Dbm extrapolate_lu_plus(Dbm const &d, LUBounds const &lu)
{
  std::size_t const n = d.dim();
  if (lu.lower.size() < n || lu.upper.size() < n)
    throw std::invalid_argument("LU bounds do not cover every clock");

  // "Lower bound of x exceeds B": D[0][x] < (-B, <=); always true for B = -inf.
  auto lower_exceeds = [&d](std::size_t x, std::int64_t bound) {
    return bound == kNoBound || d.at(0, x) < Bound::le(-bound);
  };

  Dbm out = d;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      Bound const dij = d.at(i, j);
      if (i != 0) {
        std::int64_t const li = lu.lower[i];
        if (li == kNoBound || dij > Bound::le(li) || lower_exceeds(i, li)
            || (j != 0 && lower_exceeds(j, lu.upper[j])))
          out.at(i, j) = Bound::infinity();
      }
      else if (j != 0 && lower_exceeds(j, lu.upper[j])) {
        std::int64_t const uj = lu.upper[j];
        out.at(0, j) = uj == kNoBound ? Bound::le_zero() : Bound::lt(-uj);
      }
    }
  }
  auto closed = canonicalize(std::move(out));
  assert(closed.has_value());
  return std::move(*closed);
}

bool includes(Dbm const &big, Dbm const &small)
{
  if (big.dim() != small.dim())
    throw std::invalid_argument("zone dimension mismatch");
  auto const b = big.entries();
  auto const s = small.entries();
  for (std::size_t k = 0; k < b.size(); ++k)
    if (s[k] > b[k])
      return false;
  return true;
}

bool is_true_zone(Dbm const &d)
{
  std::size_t const n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Bound const expect = (i == j || i == 0) ? Bound::le_zero() : Bound::infinity();
      if (d.at(i, j) != expect)
        return false;
    }
  return true;
}

bool is_canonical(Dbm const &d)
{
  std::size_t const n = d.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (d.at(i, i) != Bound::le_zero() || d.at(0, i) > Bound::le_zero())
      return false;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d.at(i, k) + d.at(k, j) < d.at(i, j))
          return false;
  }
  return true;
}

bool valuation_in_zone(Valuation const &v, Dbm const &d)
{
  if (v.scaled.size() != d.dim() || v.denominator <= 0)
    throw std::invalid_argument("valuation does not match zone dimension");
  std::size_t const n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Bound const b = d.at(i, j);
      if (b.is_infinity())
        continue;
      std::int64_t const lhs = v.scaled[i] - v.scaled[j];
      std::int64_t const rhs = b.value() * v.denominator;
      if (b.is_strict() ? !(lhs < rhs) : !(lhs <= rhs))
        return false;
    }
  return true;
}

std::string render(Dbm const &d, std::span<std::string const> clock_names)
{
  std::size_t const n = d.dim();
  if (clock_names.size() + 1 < n)
    throw std::invalid_argument("not enough clock names");
  std::vector<std::string> parts;
  auto name = [&](std::size_t i) { return clock_names[i - 1]; };

  for (std::size_t i = 1; i < n; ++i) {
    Bound const lo = d.at(0, i);
    Bound const hi = d.at(i, 0);
    bool const has_lo = lo != Bound::le_zero();
    if (!hi.is_infinity() && !lo.is_strict() && !hi.is_strict() && hi.value() == -lo.value()) {
      parts.push_back(name(i) + "=" + std::to_string(hi.value()));
      continue;
    }
    std::string s;
    if (has_lo && !hi.is_infinity())
      s = std::to_string(-lo.value()) + (lo.is_strict() ? "<" : "<=") + name(i);
    else if (has_lo)
      s = name(i) + (lo.is_strict() ? ">" : ">=") + std::to_string(-lo.value());
    else
      s = name(i);
    if (!hi.is_infinity())
      s += to_string(hi);
    if (s != name(i))
      parts.push_back(std::move(s));
  }

  // Difference constraints not already implied by the clock bounds.
  auto diff = [&](std::size_t i, std::size_t j) {
    Bound const b = d.at(i, j);
    if (b.is_infinity() || !(b < d.at(i, 0) + d.at(0, j)))
      return std::string{};
    return name(i) + "-" + name(j) + to_string(b);
  };
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Bound const ij = d.at(i, j);
      Bound const ji = d.at(j, i);
      std::string const upper = diff(i, j);
      std::string const lower = diff(j, i);
      if (upper.empty() && lower.empty())
        continue;
      if (!ij.is_infinity() && !ji.is_infinity() && !ij.is_strict() && !ji.is_strict()
          && ij.value() == -ji.value()) {
        if (ij.value() == 0)
          parts.push_back(name(i) + "=" + name(j));
        else
          parts.push_back(name(i) + "-" + name(j) + "=" + std::to_string(ij.value()));
        continue;
      }
      for (auto s : {upper, lower})
        if (!s.empty())
          parts.push_back(std::move(s));
    }

  if (parts.empty())
    return "true";
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k)
    os << (k ? " && " : "") << parts[k];
  return os.str();
}

std::string render(Dbm const &d)
{
  std::vector<std::string> names;
  for (std::size_t i = 1; i < d.dim(); ++i)
    names.push_back("x" + std::to_string(i));
  return render(d, names);
}

}  // namespace tareach
