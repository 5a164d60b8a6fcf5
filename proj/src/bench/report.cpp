#include "tareach/bench/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace tareach::bench {

namespace {

std::string seed_text(std::optional<std::uint64_t> s) { return s ? std::to_string(*s) : "-"; }

nlohmann::json seed_json(std::optional<std::uint64_t> s) { return s ? nlohmann::json(*s) : nlohmann::json(nullptr); }

std::string to_json(StatsReport const &report)
{
  nlohmann::ordered_json j;
  j["model"] = report.model;
  j["seeds"] = {{"edge", seed_json(report.edge_seed)}, {"order", seed_json(report.order_seed)}};
  j["rows"] = nlohmann::ordered_json::array();
  for (auto const &r : report.rows) {
    nlohmann::ordered_json row;
    row["strategy"] = to_string(r.strategy);
    row["visited"] = r.stats.visited;
    row["mistakes"] = r.stats.mistakes;
    row["stored_max"] = r.stats.stored_max;
    row["stored_final"] = r.stats.stored_final;
    row["visited_ranking"] = r.stats.visited_ranking;
    row["answer"] = to_string(r.answer);
    j["rows"].push_back(std::move(row));
  }
  if (report.oracle) {
    j["oracle"] = {{"answer", to_string(report.oracle->answer)},
                   {"nodes", report.oracle->nodes},
                   {"check", report.oracle->ok ? "ok" : "mismatch"},
                   {"detail", report.oracle->detail}};
  }
  return j.dump(2) + "\n";
}

std::string to_table(StatsReport const &report)
{
  constexpr std::array<char const *, 7> header{"strategy",     "visited",         "mistakes", "stored_max",
                                               "stored_final", "visited_ranking", "answer"};
  std::vector<std::array<std::string, 7>> cells;
  for (auto const &r : report.rows)
    cells.push_back({std::string(to_string(r.strategy)), std::to_string(r.stats.visited),
                     std::to_string(r.stats.mistakes), std::to_string(r.stats.stored_max),
                     std::to_string(r.stats.stored_final), std::to_string(r.stats.visited_ranking),
                     std::string(to_string(r.answer))});

  std::array<std::size_t, 7> width{};
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = std::string_view(header[c]).size();
    for (auto const &row : cells)
      width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream os;
  os << "model: " << report.model << "  seeds: edge=" << seed_text(report.edge_seed)
     << " order=" << seed_text(report.order_seed) << "\n";
  auto line = [&](auto const &row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c)
        os << " | ";
      // strategy left-aligned, counters right-aligned, answer unpadded
      bool const last = c == row.size() - 1;
      if (last)
        os << row[c];
      else
        os << (c == 0 ? std::left : std::right) << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << "\n";
  };
  line(header);
  for (auto const &row : cells)
    line(row);
  if (report.oracle) {
    os << "oracle: " << (report.oracle->ok ? "ok" : "mismatch") << " (" << to_string(report.oracle->answer) << ", "
       << report.oracle->nodes << " nodes)";
    if (!report.oracle->detail.empty())
      os << ": " << report.oracle->detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_stats(StatsReport const &report, ReportFormat format)
{
  return format == ReportFormat::json ? to_json(report) : to_table(report);
}

}  // namespace tareach::bench
