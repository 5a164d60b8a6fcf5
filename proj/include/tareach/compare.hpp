// Batch execution of independent reachability runs, and cross-checking of
// results against the exhaustive oracle.
//
// Runs share only immutable inputs, so a batch can be spread over OpenMP
// threads. The serial path is the reference; both produce identical results
// in job order.

#ifndef TAREACH_COMPARE_HPP
#define TAREACH_COMPARE_HPP

#include <span>
#include <vector>

#include "tareach/bench/report.hpp"
#include "tareach/search.hpp"
#include "tareach/symgraph.hpp"

namespace tareach {

enum class Execution { serial, parallel };

struct SearchJob {
  Network const *network = nullptr;
  StrategyConfig config;
};

/// Results in job order. If a job throws, the first failing job's exception
/// (in job order) is rethrown after the batch completes.
std::vector<SearchResult> run_batch(std::span<SearchJob const> jobs, Execution mode);

/// All five strategies with the seeds of `base`.
std::vector<SearchResult> run_all_strategies(Network const &net, StrategyConfig const &base, Execution mode);

/// Answer agreement with the oracle and, for unreachable runs, that every
/// oracle node is covered by the final passed store.
bench::OracleCheck check_against_oracle(SearchResult const &result, OracleResult const &oracle);

}  // namespace tareach

#endif
