// Difference bound matrices and the zone operators used by the zone graph.
//
// A Dbm of dimension n+1 stores bounds on x_i - x_j for clocks x_1..x_n,
// index 0 being the reference clock whose value is always 0. All operators
// work on canonical (shortest-path closed) matrices; the empty zone is
// represented as std::nullopt rather than as a matrix.

#ifndef TAREACH_ZONE_HPP
#define TAREACH_ZONE_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tareach {

using ClockId = std::uint32_t;  // DBM index, 1-based; 0 is the reference clock
inline constexpr ClockId kReferenceClock = 0;

/// Largest guard constant accepted anywhere. Keeps every bound sum far away
/// from the int64 sentinel used for infinity.
inline constexpr std::int64_t kMaxConstant = std::int64_t{1} << 30;

enum class Strictness : std::uint8_t { strict, weak };

/// One DBM entry: (value, strictness) or +infinity.
///
/// Encoded as raw = 2*value + (weak ? 1 : 0) so that the natural integer
/// order on raw is the bound order: (c,<) < (c,<=) < (c+1,<).
class Bound {
public:
  constexpr Bound() = default;
  constexpr Bound(std::int64_t value, Strictness s) : raw_{value * 2 + (s == Strictness::weak ? 1 : 0)} {}

  static constexpr Bound infinity() { return from_raw(kInfinityRaw); }
  static constexpr Bound le(std::int64_t value) { return {value, Strictness::weak}; }
  static constexpr Bound lt(std::int64_t value) { return {value, Strictness::strict}; }
  static constexpr Bound le_zero() { return le(0); }

  constexpr bool is_infinity() const { return raw_ == kInfinityRaw; }
  constexpr bool is_strict() const { return (raw_ & 1) == 0; }
  constexpr std::int64_t value() const { return raw_ >> 1; }
  constexpr std::int64_t raw() const { return raw_; }

  constexpr auto operator<=>(Bound const &) const = default;

  friend constexpr Bound operator+(Bound a, Bound b)
  {
    if (a.is_infinity() || b.is_infinity())
      return infinity();
    return from_raw((a.raw_ & ~std::int64_t{1}) + (b.raw_ & ~std::int64_t{1}) + (a.raw_ & b.raw_ & 1));
  }

private:
  // even, so infinity reads as strict
  static constexpr std::int64_t kInfinityRaw = std::numeric_limits<std::int64_t>::max() - 1;

  static constexpr Bound from_raw(std::int64_t raw)
  {
    Bound b;
    b.raw_ = raw;
    return b;
  }

  std::int64_t raw_ = kInfinityRaw;
};

std::string to_string(Bound b);

enum class CmpOp : std::uint8_t { lt, le, eq, ge, gt };

std::string_view to_string(CmpOp op);

/// Atomic clock constraint `clock op constant`.
struct ClockConstraint {
  ClockId clock = 1;
  CmpOp op = CmpOp::le;
  std::int64_t constant = 0;

  bool operator==(ClockConstraint const &) const = default;
};

/// Sentinel for an absent L or U bound (the clock never appears in such a guard).
inline constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::min();

/// Per-clock maximal lower-bound (L) and upper-bound (U) guard constants.
/// Both vectors are indexed by ClockId; entry 0 is unused.
struct LUBounds {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  explicit LUBounds(std::size_t clocks = 0) : lower(clocks + 1, kNoBound), upper(clocks + 1, kNoBound) {}
  bool operator==(LUBounds const &) const = default;
};

/// Square matrix of bounds. A default-constructed Dbm of a given dimension is
/// the true zone (every clock nonnegative, nothing else), which is canonical.
class Dbm {
public:
  explicit Dbm(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t clock_count() const { return dim_ - 1; }

  Bound at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Bound &at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  std::span<Bound const> entries() const { return entries_; }

  bool operator==(Dbm const &) const = default;

private:
  std::size_t dim_;
  std::vector<Bound> entries_;
};

/// All-pairs shortest path closure. Also enforces x_0 - x_i <= 0 and zero
/// diagonal. Returns nullopt when the constraints are unsatisfiable.
std::optional<Dbm> canonicalize(Dbm d);

/// Delay closure of the origin: all clocks equal and nonnegative.
Dbm initial_zone(std::size_t nclocks);

/// Intersection with one atomic constraint; nullopt if empty.
/// Throws std::out_of_range for a clock index outside the matrix.
std::optional<Dbm> constrain(Dbm d, ClockConstraint const &atom);

/// Intersection with a conjunction of atoms; nullopt as soon as one empties it.
std::optional<Dbm> constrain_all(Dbm d, std::span<ClockConstraint const> guard);

Dbm reset(Dbm d, std::span<ClockId const> clocks);

Dbm delay(Dbm d);

/// Extra+_LU followed by re-canonicalization.
Dbm extrapolate_lu_plus(Dbm const &d, LUBounds const &lu);

/// Entrywise inclusion of canonical forms. Throws std::invalid_argument on
/// dimension mismatch.
bool includes(Dbm const &big, Dbm const &small);

bool is_true_zone(Dbm const &d);

bool is_canonical(Dbm const &d);

/// Clock valuation with rational values k/denominator. Index 0 is the
/// reference clock and must stay 0.
struct Valuation {
  std::vector<std::int64_t> scaled;
  std::int64_t denominator = 1;
};

bool valuation_in_zone(Valuation const &v, Dbm const &d);

/// Conjunction rendering such as "1<y<=5 && x-y<=0"; "true" for the true zone.
/// `clock_names[k]` names clock k+1.
std::string render(Dbm const &d, std::span<std::string const> clock_names);

/// Rendering with generated names x1..xn.
std::string render(Dbm const &d);

}  // namespace tareach

#endif
