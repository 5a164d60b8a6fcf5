// Times a batch of independent searches serially and over OpenMP threads
// and checks that both produce the same results.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tareach/bench/generators.hpp"
#include "tareach/compare.hpp"

using namespace tareach;

namespace {

double time_batch(std::vector<SearchJob> const &jobs, Execution mode, int reps, std::vector<SearchResult> &out)
{
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto const t0 = std::chrono::steady_clock::now();
    out = run_batch(jobs, mode);
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool same(std::vector<SearchResult> const &a, std::vector<SearchResult> const &b)
{
  if (a.size() != b.size())
    return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].answer != b[k].answer || a[k].stats != b[k].stats)
      return false;
  return true;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Serial vs parallel batch of reachability searches"};
  std::vector<std::string> models{"blowup:8", "fischer:3", "fischer:4", "fischer-weak:3"};
  int seeds = 8;
  int reps = 3;
  int threads = 0;
  app.add_option("-m,--model", models, "Model specs");
  app.add_option("-s,--seeds", seeds, "Edge-shuffle seeds per model and strategy")->check(CLI::PositiveNumber);
  app.add_option("-r,--reps", reps, "Repetitions; the best time is reported")->check(CLI::PositiveNumber);
  app.add_option("-t,--threads", threads, "OpenMP threads (0 = runtime default)");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0)
    omp_set_num_threads(threads);

  std::vector<Network> nets;
  for (auto const &m : models)
    nets.push_back(bench::generate(m));
  std::vector<SearchJob> jobs;
  for (auto const &net : nets)
    for (int s = 0; s < seeds; ++s)
      for (Strategy st : kAllStrategies) {
        StrategyConfig cfg;
        cfg.strategy = st;
        cfg.edge_shuffle_seed = static_cast<std::uint64_t>(s);
        jobs.push_back({&net, cfg});
      }

  std::vector<SearchResult> serial, parallel;
  double const ts = time_batch(jobs, Execution::serial, reps, serial);
  double const tp = time_batch(jobs, Execution::parallel, reps, parallel);
  bool const ok = same(serial, parallel);

  std::printf("jobs      %zu\n", jobs.size());
  std::printf("threads   %d\n", omp_get_max_threads());
  std::printf("serial    %.4f s\n", ts);
  std::printf("parallel  %.4f s\n", tp);
  std::printf("speedup   %.2f\n", ts / tp);
  std::printf("results   %s\n", ok ? "identical" : "DIFFER");
  return ok ? 0 : 1;
}
