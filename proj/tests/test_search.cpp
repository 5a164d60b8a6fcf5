#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tareach/bench/generators.hpp"
#include "tareach/bench/model_text.hpp"
#include "tareach/search.hpp"

using namespace tareach;

namespace {

SearchResult run(Network const &net, Strategy s, std::optional<std::uint64_t> edge_seed = {})
{
  StrategyConfig cfg;
  cfg.strategy = s;
  cfg.edge_shuffle_seed = edge_seed;
  cfg.audit = true;
  return check_reachability(net, cfg);
}

SymNode node(LocationId loc, Dbm zone) { return SymNode{ProductState{{loc}}, std::move(zone)}; }

Dbm y_gt(std::int64_t c) { return *constrain(initial_zone(1), {1, CmpOp::gt, c}); }

// Two clocks kept equal; the long way to q3 is one step longer, so BFS
// expands the small q3 node before the big one arrives. The guard on x is
// never enabled and only keeps the L and U bounds large.
constexpr char const *kLateCover = R"(
process:P
clock:x
clock:y
location:P:q1:initial
location:P:q2
location:P:q2b
location:P:q3
location:P:q4
location:P:dead
edge:P:q1:q2:a
edge:P:q2:q2b:b
edge:P:q2b:q3:c
edge:P:q1:q3:d:guard=y>1
edge:P:q3:q4:e:guard=y<=5
edge:P:q4:dead:f:guard=x>=10&&x<=10&&y>=10&&y<=10&&x<1
)";

// The initial node x=y is later covered by x<=y coming back from q1.
constexpr char const *kRootCover = R"(
process:P
clock:x
clock:y
location:P:q0:initial
location:P:q1
location:P:q2
edge:P:q0:q1:go:reset=x
edge:P:q1:q0:back
edge:P:q1:q2:probe:guard=x>=2&&x<=2&&y>=2&&y<=2
)";

}  // namespace

TEST_CASE("racing: every strategy agrees, tw-bfs makes no mistake")
{
  Network const net = bench::generate_racing();
  for (Strategy s : kAllStrategies) {
    CAPTURE(to_string(s));
    SearchResult const r = run(net, s);
    CHECK(r.answer == Answer::unreachable);
  }
  CHECK(run(net, Strategy::tw_bfs).stats.mistakes == 0);
}

TEST_CASE("racing golden counts with the short edge first")
{
  Network const net = bench::generate_racing();
  // seed 0 enumerates q1 -> q3 before q1 -> q2
  REQUIRE(enabled_product_edges(net, initial_state(net), 0)[0].label == "A.c");
  SearchStats const bfs = run(net, Strategy::bfs, 0).stats;
  CHECK(bfs.visited == 6);
  CHECK(bfs.mistakes == 2);
  CHECK(bfs.stored_max == 4);
  CHECK(bfs.stored_final == 4);
  SearchStats const tw = run(net, Strategy::tw_bfs, 0).stats;
  CHECK(tw.visited == 4);
  CHECK(tw.mistakes == 0);
}

TEST_CASE("accepting initial state")
{
  Network const net = bench::parse_model("process:P\nclock:x\nlocation:P:q:initial:accepting\nedge:P:q:q:a\n");
  for (Strategy s : kAllStrategies) {
    SearchResult const r = run(net, s);
    CHECK(r.answer == Answer::reachable);
    CHECK(r.stats.visited == 1);
    CHECK(r.stats.mistakes == 0);
  }
}

TEST_CASE("init rank")
{
  CHECK(init_rank(node(2, initial_zone(1))) == Rank::infinity());
  CHECK(init_rank(node(2, y_gt(1))) == Rank{0});
  CHECK(init_rank(node(0, initial_zone(2))) == Rank{0});
  CHECK(Rank::infinity().next() == Rank::infinity());
  CHECK(Rank{3} < Rank::infinity());
}

TEST_CASE("waiting list policies")
{
  PassedTree tree(false);
  NodeId const small = tree.add(node(0, y_gt(1)), Rank{0}, tree.root());
  NodeId const big = tree.add(node(3, initial_zone(1)), Rank::infinity(), tree.root());

  WaitingList bfs(Strategy::bfs);
  bfs.push(tree, small);
  bfs.push(tree, big);
  CHECK(bfs.pop(tree) == small);

  WaitingList dfs(Strategy::dfs);
  dfs.push(tree, small);
  dfs.push(tree, big);
  CHECK(dfs.pop(tree) == big);

  WaitingList rank(Strategy::rank_bfs);
  rank.push(tree, small);
  rank.push(tree, big);
  CHECK(rank.pop(tree) == big);

  JointOrder order;
  order.per_process.push_back(TopoOrder{{0, 1, 2, 3}, {}});
  WaitingList tw(Strategy::tw_bfs, &order);
  tw.push(tree, small);
  tw.push(tree, big);
  CHECK(tw.pop(tree) == big);
  CHECK(tw.pop(tree) == small);
  CHECK_FALSE(tw.pop(tree));

  WaitingList w(Strategy::waiting, &order);
  w.push(tree, big);
  w.push(tree, small);
  CHECK(w.pop(tree) == small);

  // lazily skips nodes that left the waiting set
  WaitingList lazy(Strategy::bfs);
  lazy.push(tree, small);
  lazy.push(tree, big);
  tree.splice_remove(small);
  CHECK(lazy.pop(tree) == big);
}

TEST_CASE("passed tree")
{
  PassedTree t;
  NodeId const a = t.add(node(0, initial_zone(1)), Rank{0}, t.root());
  NodeId const b = t.add(node(1, initial_zone(1)), Rank{0}, a);
  NodeId const c = t.add(node(2, initial_zone(1)), Rank{2}, a);
  NodeId const d = t.add(node(3, initial_zone(1)), Rank{0}, b);
  t[a].in_waiting = false;
  t[b].in_waiting = false;

  std::uint64_t touched = 0;
  CHECK(t.max_rank_waiting(c, touched) == Rank{2});
  CHECK(t.max_rank_waiting(a, touched) == Rank{2});
  CHECK(touched == 1 + 4);
  t[c].in_waiting = false;
  t[d].in_waiting = false;
  CHECK(t.max_rank_waiting(a, touched) == Rank{0});

  // internal node with two children
  CHECK(t.children(a) == std::vector<NodeId>{b, c});
  t.splice_remove(b);
  CHECK(t.children(a) == std::vector<NodeId>{d, c});
  CHECK(t[d].parent == a);
  // leaf removal
  t.splice_remove(c);
  CHECK(t.children(a) == std::vector<NodeId>{d});
  // the top node hands its children to the virtual root
  t.splice_remove(a);
  CHECK(t.children(t.root()) == std::vector<NodeId>{d});
  // adding below a removed node climbs to the nearest alive ancestor
  NodeId const e = t.add(node(4, initial_zone(1)), Rank{0}, b);
  CHECK(t[e].parent == t.root());
  CHECK(t.alive_count() == 2);
}

TEST_CASE("rank goes up when an expanded node is covered")
{
  Network const net = bench::parse_model(kLateCover);
  SearchResult const r = run(net, Strategy::rank_bfs);
  CHECK(r.answer == Answer::unreachable);
  CHECK(r.stats.mistakes == 1);
  CHECK(r.stats.visited_ranking == 2);
  LocationId const q3 = *net.processes[0].find_location("q3");
  auto const it = std::find_if(r.passed.begin(), r.passed.end(),
                               [&](PassedEntry const &e) { return e.node.state.components[0] == q3; });
  REQUIRE(it != r.passed.end());
  CHECK(it->rank == Rank{1});
  CHECK(run(net, Strategy::bfs).stats.mistakes == 2);
}

TEST_CASE("covering the initial node reattaches its subtree to the root")
{
  Network const net = bench::parse_model(kRootCover);
  SearchResult const r = run(net, Strategy::rank_bfs);  // audited: tree reaches every node
  CHECK(r.answer == Answer::unreachable);
  CHECK(r.stats.mistakes == 1);
  LocationId const q0 = *net.processes[0].find_location("q0");
  std::size_t at_q0 = 0;
  for (auto const &e : r.passed)
    if (e.node.state.components[0] == q0) {
      ++at_q0;
      CHECK(includes(e.node.zone, initial_zone(2)));
      CHECK(e.node.zone != initial_zone(2));
    }
  CHECK(at_q0 == 1);
}

TEST_CASE("nodes evicted before expansion are not mistakes")
{
  // default racing order: (q3, y>1) is evicted while still waiting
  SearchResult const r = run(bench::generate_racing(), Strategy::bfs);
  CHECK(r.stats.mistakes == 0);
  CHECK(r.stats.visited == 4);
  CHECK(r.stats.stored_final == 4);
  CHECK(r.stats.stored_max == 4);
}

TEST_CASE("strategy names")
{
  for (Strategy s : kAllStrategies)
    CHECK(parse_strategy(to_string(s)) == s);
  CHECK(parse_strategy("rank_bfs") == Strategy::rank_bfs);
  CHECK(parse_strategy("waiting") == Strategy::waiting);
  CHECK_FALSE(parse_strategy("astar"));
}

TEST_CASE("property: audited runs on random models")
{
  tareach::testing::Rng rng{51};
  for (int k = 0; k < 300; ++k) {
    Network const net = tareach::testing::random_network(rng);
    bool const oracle = oracle_enumerate(net, 50000).reachable;
    for (Strategy s : kAllStrategies) {
      CAPTURE(k);
      CAPTURE(to_string(s));
      SearchResult r;
      CHECK_NOTHROW(r = run(net, s, k % 2 ? std::optional<std::uint64_t>{k} : std::nullopt));
      CHECK((r.answer == Answer::reachable) == oracle);
      CHECK(r.stats.stored_final <= r.stats.stored_max);
      CHECK(r.stats.mistakes <= r.stats.visited);
      if (r.answer == Answer::unreachable) {
        auto const expanded = std::count_if(r.passed.begin(), r.passed.end(), [](auto const &e) { return e.expanded; });
        CHECK(r.stats.visited == r.stats.mistakes + static_cast<std::uint64_t>(expanded));
      }
    }
  }
}
