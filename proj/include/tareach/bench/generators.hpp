// Built-in model families.

#ifndef TAREACH_BENCH_GENERATORS_HPP
#define TAREACH_BENCH_GENERATORS_HPP

#include <string_view>

#include "tareach/automaton.hpp"

namespace tareach::bench {

/// One process, clock y, q1..q4, none accepting:
///   q1 -> q2, q2 -> q3, q1 -[y>1]-> q3, q3 -[y<=5]-> q4, q4 -{y:=0}-> q1
/// The short path q1 -> q3 reaches q3 with a smaller zone than q1 -> q2 -> q3.
Network generate_racing();

/// Chain of n diamonds over q1..q_{2n+1} with one clock per diamond. x_1
/// starts with the run and x_{i+1} is reset on both ways out of diamond i.
/// The short edge q_{2i-1} -> q_{2i+1} needs x_i = 0, the long path through
/// q_{2i} is unguarded, so short gives x_i = x_{i+1} and long x_i >= x_{i+1}:
/// 2^n zones in q_{2n+1}, all below the one of the all-long path.
/// q_{2n+1} -> qf is guarded by x_1<0, so qf is unreachable.
/// Throws std::invalid_argument for n = 0.
Network generate_blowup(std::size_t n);

/// Fischer's mutual exclusion for n >= 2 processes P1..Pn with clocks
/// x1..xn and the shared id variable encoded as a process `id` with
/// locations id0..idn. A process writes id within 1 time unit and reads it
/// back after more than 2. Accepting: P1 and P2 both in cs.
/// `weakened` replaces the read guard x_i>2 by x_i>=0, which breaks mutual
/// exclusion.
Network generate_fischer(std::size_t n, bool weakened = false);

/// "racing", "blowup:N", "fischer:N" or "fischer-weak:N".
/// Throws std::invalid_argument on an unknown name or a bad N.
Network generate(std::string_view spec);

}  // namespace tareach::bench

#endif
