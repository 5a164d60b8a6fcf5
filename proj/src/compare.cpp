#include "tareach/compare.hpp"

#include <exception>
#include <unordered_map>


namespace tareach {

std::vector<SearchResult> run_batch(std::span<SearchJob const> jobs, Execution mode)
{
  std::vector<SearchResult> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  auto run_one = [&](std::size_t k) {
    try {
      results[k] = check_reachability(*jobs[k].network, jobs[k].config);
    }
    catch (...) {
      errors[k] = std::current_exception();
    }
  };

  if (mode == Execution::serial) {
    for (std::size_t k = 0; k < jobs.size(); ++k)
      run_one(k);
  }
  else {
    auto const n = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < n; ++k)
      run_one(static_cast<std::size_t>(k));
  }

  for (auto const &e : errors)
    if (e)
      std::rethrow_exception(e);
  return results;
}

std::vector<SearchResult> run_all_strategies(Network const &net, StrategyConfig const &base, Execution mode)
{
  std::vector<SearchJob> jobs;
  for (Strategy s : kAllStrategies) {
    SearchJob job{&net, base};
    job.config.strategy = s;
    jobs.push_back(std::move(job));
  }
  return run_batch(jobs, mode);
}

bench::OracleCheck check_against_oracle(SearchResult const &result, OracleResult const &oracle)
{
  bench::OracleCheck check;
  check.answer = oracle.reachable ? Answer::reachable : Answer::unreachable;
  check.nodes = oracle.nodes.size();
  if (result.answer != check.answer) {
    check.ok = false;
    check.detail = "search answered " + std::string(to_string(result.answer));
    return check;
  }
  if (result.answer == Answer::reachable)
    return check;

  std::unordered_map<ProductState, std::vector<Dbm const *>, ProductStateHash> passed;
  for (auto const &e : result.passed)
    passed[e.node.state].push_back(&e.node.zone);
  for (SymNode const &n : oracle.nodes) {
    bool covered = false;
    if (auto it = passed.find(n.state); it != passed.end())
      for (Dbm const *z : it->second)
        covered = covered || includes(*z, n.zone);
    if (!covered) {
      check.ok = false;
      check.detail = "oracle node not covered by the passed store";
      return check;
    }
  }
  return check;
}

}  // namespace tareach
