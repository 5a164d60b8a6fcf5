// Per-strategy statistics reports, as an aligned table or as JSON.

#ifndef TAREACH_BENCH_REPORT_HPP
#define TAREACH_BENCH_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tareach/search.hpp"

namespace tareach::bench {

struct StatsRow {
  Strategy strategy = Strategy::bfs;
  SearchStats stats;
  Answer answer = Answer::unreachable;
};

/// Outcome of cross-checking search results against the exhaustive oracle.
struct OracleCheck {
  Answer answer = Answer::unreachable;
  std::uint64_t nodes = 0;
  bool ok = true;
  std::string detail;  // first failure, empty when ok
};

struct StatsReport {
  std::string model;
  std::optional<std::uint64_t> edge_seed;
  std::optional<std::uint64_t> order_seed;
  std::vector<StatsRow> rows;
  std::optional<OracleCheck> oracle;
};

enum class ReportFormat { table, json };

/// JSON keys: model, seeds{edge,order}, rows[{strategy, visited, mistakes,
/// stored_max, stored_final, visited_ranking, answer}], and oracle{answer,
/// nodes, check, detail} when the report carries an oracle check.
std::string emit_stats(StatsReport const &report, ReportFormat format);

}  // namespace tareach::bench

#endif
