#include "tareach/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tareach/bench/generators.hpp"
#include "tareach/bench/model_text.hpp"
#include "tareach/bench/report.hpp"
#include "tareach/compare.hpp"

namespace tareach {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct RunOptions {
  std::string model_path;
  std::string gen_spec;
  std::string strategy;
  std::optional<std::uint64_t> edge_seed;
  std::optional<std::uint64_t> order_seed;
  std::string format = "table";
  bool verify = false;
  bool dump_order = false;
  std::size_t oracle_limit = 1'000'000;
};

void add_run_options(CLI::App *cmd, RunOptions &o)
{
  auto *model = cmd->add_option("--model", o.model_path, "Model file in the text format");
  auto *gen = cmd->add_option("--gen", o.gen_spec, "Built-in model: racing, blowup:N, fischer:N, fischer-weak:N");
  model->excludes(gen);
  gen->excludes(model);
  cmd->add_option("--shuffle-edges", o.edge_seed, "Seed permuting transition order per state");
  cmd->add_option("--shuffle-order", o.order_seed, "Seed permuting the DFS behind the topological order");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  cmd->add_flag("--verify", o.verify, "Cross-check against exhaustive enumeration");
  cmd->add_option("--oracle-limit", o.oracle_limit, "Node limit for --verify")->check(CLI::PositiveNumber);
}

Network load(RunOptions const &o)
{
  if (!o.gen_spec.empty())
    return bench::generate(o.gen_spec);
  if (!o.model_path.empty())
    return bench::load_model(o.model_path);
  throw std::invalid_argument("one of --model or --gen is required");
}

int run_search(RunOptions const &o, bool compare, std::ostream &out, std::ostream &err)
{
  Network net;
  std::vector<Strategy> strategies;
  try {
    net = load(o);
    if (compare) {
      strategies.assign(std::begin(kAllStrategies), std::end(kAllStrategies));
    }
    else {
      auto s = parse_strategy(o.strategy);
      if (!s)
        throw std::invalid_argument("unknown strategy '" + o.strategy + "'");
      strategies.push_back(*s);
    }
  }
  catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  StrategyConfig base;
  base.edge_shuffle_seed = o.edge_seed;
  base.order_shuffle_seed = o.order_seed;
  base.order = make_joint_order(net, o.order_seed);
  if (o.dump_order)
    err << dump_order(net, *base.order);

  std::vector<SearchJob> jobs;
  for (Strategy s : strategies) {
    SearchJob job{&net, base};
    job.config.strategy = s;
    jobs.push_back(std::move(job));
  }
  std::vector<SearchResult> results = run_batch(jobs, compare ? Execution::parallel : Execution::serial);

  bench::StatsReport report;
  report.model = !net.name.empty() ? net.name : (o.gen_spec.empty() ? o.model_path : o.gen_spec);
  report.edge_seed = o.edge_seed;
  report.order_seed = o.order_seed;
  for (std::size_t k = 0; k < strategies.size(); ++k)
    report.rows.push_back({strategies[k], results[k].stats, results[k].answer});

  int status = kExitOk;
  if (o.verify) {
    OracleResult oracle;
    try {
      oracle = oracle_enumerate(net, o.oracle_limit);
    }
    catch (OracleLimitExceeded const &e) {
      err << "error: " << e.what() << "\n";
      return kExitInternal;
    }
    bench::OracleCheck combined;
    for (std::size_t k = 0; k < results.size(); ++k) {
      bench::OracleCheck c = check_against_oracle(results[k], oracle);
      if (k == 0 || (combined.ok && !c.ok)) {
        combined = c;
        if (!c.ok)
          combined.detail = std::string(to_string(strategies[k])) + ": " + c.detail;
      }
    }
    report.oracle = combined;
    if (!combined.ok) {
      err << "error: oracle mismatch: " << combined.detail << "\n";
      status = kExitInternal;
    }
  }

  out << bench::emit_stats(report, o.format == "json" ? bench::ReportFormat::json : bench::ReportFormat::table);
  return status;
}

int run_gen(std::string const &spec, std::string const &output, std::ostream &out, std::ostream &err)
{
  std::string text;
  try {
    text = bench::render_model(bench::generate(spec));
  }
  catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (output.empty() || output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(output);
  file << text;
  file.close();
  if (!file) {
    err << "error: cannot write " << output << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Zone-based reachability checker for networks of timed automata", "tareach"};
  app.require_subcommand(1);

  RunOptions check_opts;
  auto *check = app.add_subcommand("check", "Run one search strategy on a model");
  add_run_options(check, check_opts);
  check->add_option("--strategy", check_opts.strategy, "bfs, dfs, r-bfs, w-bfs or tw-bfs")->required();
  check->add_flag("--dump-order", check_opts.dump_order, "Print the topological order on standard error");

  RunOptions compare_opts;
  auto *compare = app.add_subcommand("compare", "Run all five strategies on a model");
  add_run_options(compare, compare_opts);

  std::string gen_spec;
  std::string gen_output;
  auto *gen = app.add_subcommand("gen", "Write a built-in model in the text format");
  gen->add_option("spec", gen_spec, "racing, blowup:N, fischer:N or fischer-weak:N")->required();
  gen->add_option("-o,--output", gen_output, "Output file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  }
  catch (CLI::CallForHelp const &) {
    out << app.help();
    return kExitOk;
  }
  catch (CLI::CallForAllHelp const &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  }
  catch (CLI::ParseError const &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  if (check->parsed())
    return run_search(check_opts, false, out, err);
  if (compare->parsed())
    return run_search(compare_opts, true, out, err);
  return run_gen(gen_spec, gen_output, out, err);
}

}  // namespace tareach
