#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tareach/automaton.hpp"
#include "tareach/bench/generators.hpp"
#include "tareach/bench/model_text.hpp"

using namespace tareach;

namespace {

Network two_party()
{
  return bench::parse_model(R"(
system:pair
clock:x
clock:y
process:P1
location:P1:a:initial
location:P1:b:accepting
process:P2
location:P2:c:initial:accepting
location:P2:d
edge:P1:a:b:go:guard=x>1
edge:P1:a:a:tick:reset=x
edge:P2:c:d:go:guard=y<=5:reset=y
edge:P2:d:c:back
sync:P1@go:P2@go
)");
}

}  // namespace

TEST_CASE("lu bounds")
{
  LUBounds const lu = lu_bounds(bench::generate_racing());
  CHECK(lu.lower[1] == 1);
  CHECK(lu.upper[1] == 5);

  Network const bare = bench::parse_model("process:P\nclock:x\nclock:y\nlocation:P:l:initial\nedge:P:l:l:a\n");
  LUBounds const none = lu_bounds(bare);
  CHECK(none.lower == std::vector<std::int64_t>(3, kNoBound));
  CHECK(none.upper == std::vector<std::int64_t>(3, kNoBound));

  Network const eq = bench::parse_model("process:P\nclock:x\nlocation:P:l:initial\nedge:P:l:l:a:guard=x=3\n");
  CHECK(lu_bounds(eq).lower[1] == 3);
  CHECK(lu_bounds(eq).upper[1] == 3);
}

TEST_CASE("synchronized product edge conjoins guards and unions resets")
{
  Network const net = two_party();
  auto const edges = enabled_product_edges(net, initial_state(net));
  REQUIRE(edges.size() == 2);
  // local edges first
  CHECK(edges[0].label == "P1.tick");
  CHECK(edges[0].target.components == std::vector<LocationId>{0, 0});
  ProductEdge const &go = edges[1];
  CHECK(go.guard == std::vector<AtomicConstraint>{{1, CmpOp::gt, 1}, {2, CmpOp::le, 5}});
  CHECK(go.resets == std::vector<ClockId>{2});
  CHECK(go.target.components == std::vector<LocationId>{1, 1});
}

TEST_CASE("a sync action without a partner blocks")
{
  Network const net = two_party();
  // P2 in d: only its local edge back; P1's go has no partner
  ProductState s{{0, 1}};
  auto const edges = enabled_product_edges(net, s);
  std::set<std::string> labels;
  for (auto const &e : edges)
    labels.insert(e.label);
  CHECK(labels == std::set<std::string>{"P1.tick", "P2.back"});
}

TEST_CASE("single process: product edges are the process edges")
{
  Network const net = bench::generate_racing();
  auto const &proc = net.processes[0];
  for (LocationId l = 0; l < proc.locations.size(); ++l) {
    auto const edges = enabled_product_edges(net, ProductState{{l}});
    std::vector<Edge const *> own;
    for (auto const &e : proc.edges)
      if (e.source == l)
        own.push_back(&e);
    REQUIRE(edges.size() == own.size());
    for (std::size_t k = 0; k < own.size(); ++k) {
      CHECK(edges[k].guard == own[k]->guard);
      CHECK(edges[k].resets == own[k]->resets);
      CHECK(edges[k].target.components == std::vector<LocationId>{own[k]->target});
    }
  }
}

TEST_CASE("accepting states")
{
  Network const net = two_party();
  CHECK_FALSE(is_accepting(net, ProductState{{0, 0}}));
  CHECK(is_accepting(net, ProductState{{1, 0}}));
  CHECK_FALSE(is_accepting(net, ProductState{{1, 1}}));
  Network const one = bench::parse_model("process:P\nlocation:P:l:initial:accepting\n");
  CHECK(is_accepting(one, initial_state(one)));
}

TEST_CASE("edge shuffle is a deterministic permutation")
{
  Network const net = bench::generate_fischer(3);
  ProductState const s = initial_state(net);
  auto const plain = enabled_product_edges(net, s);
  auto const a = enabled_product_edges(net, s, 7);
  auto const b = enabled_product_edges(net, s, 7);
  REQUIRE(a.size() == plain.size());
  std::vector<std::string> la, lb, lp;
  for (std::size_t k = 0; k < a.size(); ++k) {
    la.push_back(a[k].label);
    lb.push_back(b[k].label);
    lp.push_back(plain[k].label);
  }
  CHECK(la == lb);
  std::sort(la.begin(), la.end());
  std::sort(lp.begin(), lp.end());
  CHECK(la == lp);
}

TEST_CASE("validation")
{
  Network net = two_party();
  net.processes[0].locations[1].initial = true;
  CHECK_THROWS_AS(validate(net), ModelError);

  net = two_party();
  net.processes[1].edges[0].guard.push_back({3, CmpOp::le, 1});
  CHECK_THROWS_AS(validate(net), ModelError);

  net = two_party();
  net.syncs.push_back(SyncPair{{0, 0}, {0, 1}});
  CHECK_THROWS_AS(validate(net), ModelError);

  net = two_party();
  net.processes[0].edges[0].target = 9;
  CHECK_THROWS_AS(validate(net), ModelError);

  CHECK_NOTHROW(validate(two_party()));
}

TEST_CASE("property: product guards only mention declared clocks")
{
  tareach::testing::Rng rng{21};
  for (int k = 0; k < 300; ++k) {
    Network const net = tareach::testing::random_network(rng);
    ProductSystem const sys(net);
    // every combination of locations
    std::vector<LocationId> comps(net.processes.size(), 0);
    for (;;) {
      for (auto const &e : sys.enabled_edges(ProductState{comps})) {
        for (auto const &a : e.guard)
          CHECK((a.clock >= 1 && a.clock <= net.clock_count()));
        for (ClockId c : e.resets)
          CHECK((c >= 1 && c <= net.clock_count()));
        CHECK(e.target.components.size() == net.processes.size());
      }
      std::size_t p = 0;
      while (p < comps.size() && comps[p] + 1 == net.processes[p].locations.size())
        comps[p++] = 0;
      if (p == comps.size())
        break;
      ++comps[p];
    }
  }
}
