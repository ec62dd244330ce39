#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "stegnet/flow.hpp"
#include "stegnet/oracle.hpp"
#include "test_util.hpp"

using namespace stegnet;
using testutil::int_graph;
using testutil::make_graph;

namespace {

// s-a(3), s-b(2), a-t(2), b-t(3), a-b(1): enumerating the four separating
// partitions gives crossing weights 5, 5, 7, 5, so the minimum cut is 5.
Graph diamond() {
  return make_graph({{"a"}, {"b"}, {"s"}, {"t"}},
                    {{"s", "a", 3},
                     {"s", "b", 2},
                     {"a", "t", 2},
                     {"b", "t", 3},
                     {"a", "b", 1}});
}

void check_flow_constraints(const FlowNetwork& net) {
  for (const auto& [key, arc] : net.arcs()) {
    REQUIRE(arc.flow >= -kFlowTol);
    REQUIRE(arc.flow <= arc.capacity + kFlowTol);
  }
  for (const VertexId& v : net.vertices()) {
    if (v == net.source() || v == net.sink()) continue;
    REQUIRE(std::abs(net.vertex_imbalance(v)) < 1e-9);
  }
}

}  // namespace

TEST_CASE("to_flow_network decomposes undirected edges into arc pairs") {
  Graph g = make_graph({{"a"}, {"b"}}, {{"a", "b", 5}});
  FlowNetwork net = to_flow_network(g, "a", "b");
  REQUIRE(net.arcs().size() == 2);
  REQUIRE(net.arcs().at({"a", "b"}).capacity == 5.0);
  REQUIRE(net.arcs().at({"b", "a"}).capacity == 5.0);

  Graph empty = make_graph({{"a"}, {"b"}}, {});
  REQUIRE(to_flow_network(empty, "a", "b").arcs().empty());

  Graph g5 = int_graph(7, 50, 1, 9, 11);
  REQUIRE(to_flow_network(g5, "v0", "v1").arcs().size() ==
          2 * g5.edge_count());
}

TEST_CASE("to_flow_network validates its terminals") {
  Graph g = make_graph({{"a"}, {"b"}}, {{"a", "b", 1}});
  REQUIRE_THROWS_AS(to_flow_network(g, "a", "a"), Error);
  REQUIRE_THROWS_AS(to_flow_network(g, "a", "zz"), Error);
}

TEST_CASE("max_flow on fixtures, both algorithms") {
  auto algorithms = {FlowAlgorithm::AugmentingPath, FlowAlgorithm::BlockingFlow};

  SECTION("single edge carries its capacity") {
    Graph g = make_graph({{"a"}, {"b"}}, {{"a", "b", 5}});
    for (auto alg : algorithms) {
      FlowNetwork net = to_flow_network(g, "a", "b");
      REQUIRE(max_flow(net, alg).value == 5.0);
      check_flow_constraints(net);
    }
  }
  SECTION("series path is limited by its bottleneck") {
    Graph g = make_graph({{"s"}, {"a"}, {"t"}}, {{"s", "a", 4}, {"a", "t", 7}});
    for (auto alg : algorithms) {
      FlowNetwork net = to_flow_network(g, "s", "t");
      REQUIRE(max_flow(net, alg).value == 4.0);
      check_flow_constraints(net);
    }
  }
  SECTION("diamond") {
    for (auto alg : algorithms) {
      FlowNetwork net = to_flow_network(diamond(), "s", "t");
      FlowResult r = max_flow(net, alg);
      REQUIRE(r.value == 5.0);
      REQUIRE(r.algorithm == alg);
      check_flow_constraints(net);
    }
  }
}

TEST_CASE("flow value matches at the source and at the sink") {
  Graph g = int_graph(8, 50, 1, 9, 5);
  FlowNetwork net = to_flow_network(g, "v0", "v7");
  FlowResult r = max_flow(net);
  double into_sink = 0.0;
  for (const auto& [key, arc] : net.arcs()) {
    if (key.second == "v7") into_sink += arc.flow;
    if (key.first == "v7") into_sink -= arc.flow;
  }
  REQUIRE(std::abs(r.value - net.flow_value()) < 1e-9);
  REQUIRE(std::abs(r.value - into_sink) < 1e-9);
}

TEST_CASE("residual_reachable") {
  SECTION("arcless network reaches only the source") {
    Graph g = make_graph({{"a"}, {"b"}}, {});
    FlowNetwork net = to_flow_network(g, "a", "b");
    max_flow(net);
    REQUIRE(residual_reachable(net) == std::set<VertexId>{"a"});
  }
  SECTION("a saturated edge blocks the forward direction only") {
    Graph g = make_graph({{"a"}, {"b"}}, {{"a", "b", 5}});
    FlowNetwork net = to_flow_network(g, "a", "b");
    max_flow(net);
    REQUIRE(residual_reachable(net) == std::set<VertexId>{"a"});
    // the reverse residual points into a, not out of it
    REQUIRE(net.residual("b", "a") > 0);
  }
  SECTION("diamond source side excludes the sink and bounds weight 5") {
    Graph g = diamond();
    FlowNetwork net = to_flow_network(g, "s", "t");
    max_flow(net);
    auto side = residual_reachable(net);
    REQUIRE(side.count("s") == 1);
    REQUIRE(side.count("t") == 0);
    double boundary = 0.0;
    for (const auto& [key, w] : g.edges())
      if (side.count(key.first) != side.count(key.second)) boundary += w;
    REQUIRE(boundary == 5.0);
  }
}

TEST_CASE("min_cut on fixtures") {
  SECTION("single edge") {
    Graph g = make_graph({{"a"}, {"b"}}, {{"a", "b", 27}});
    FlowNetwork net = to_flow_network(g, "a", "b");
    CutResult cut = min_cut(net);
    REQUIRE(cut.weight == 27.0);
    REQUIRE(cut.cut_edges == std::vector<EdgeKey>{{"a", "b"}});
  }
  SECTION("diamond") {
    FlowNetwork net = to_flow_network(diamond(), "s", "t");
    REQUIRE(min_cut(net).weight == 5.0);
  }
  SECTION("triangle") {
    Graph g = make_graph({{"a"}, {"b"}, {"c"}},
                         {{"a", "b", 1}, {"b", "c", 2}, {"a", "c", 3}});
    FlowNetwork net = to_flow_network(g, "a", "c");
    CutResult cut = min_cut(net);
    // both partitions enumerated: {a | b,c} = 4, {a,b | c} = 5
    REQUIRE(cut.weight == 4.0);
    REQUIRE(cut.cut_edges == std::vector<EdgeKey>{{"a", "b"}, {"a", "c"}});
  }
}

TEST_CASE("min_cut weight equals the enumerated minimum on random graphs") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = int_graph(3 + seed % 8, seed % 2 ? 60 : 30, 1, 20, 900 + seed);
    VertexId source = g.vertices().begin()->first;
    VertexId sink = std::prev(g.vertices().end())->first;
    Weight reference = oracle_min_cut(g, {{source}, {sink}});
    for (auto alg :
         {FlowAlgorithm::AugmentingPath, FlowAlgorithm::BlockingFlow}) {
      FlowNetwork net = to_flow_network(g, source, sink);
      CutResult cut = min_cut(net, alg);
      REQUIRE(cut.weight == reference);
      REQUIRE(std::abs(max_flow(net, alg).value - reference) < 1e-9);
      ++checked;
    }
  }
  REQUIRE(checked == 80);
}

TEST_CASE("the two algorithms agree on 500 random instances") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Graph g = random_graph(2 + seed % 8, 0.5, 0.5, 10.0, seed);
    FlowNetwork a = to_flow_network(g, "v0", "v1");
    FlowNetwork b = to_flow_network(g, "v0", "v1");
    double va = max_flow(a, FlowAlgorithm::AugmentingPath).value;
    double vb = max_flow(b, FlowAlgorithm::BlockingFlow).value;
    REQUIRE(std::abs(va - vb) < 1e-9);
    check_flow_constraints(a);
    check_flow_constraints(b);
  }
}

TEST_CASE("the canonical cut is independent of the algorithm") {
  // residual reachability from the source is the same for every maximum
  // flow, so both algorithms must produce the identical CutResult
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = int_graph(3 + seed % 8, 50, 1, 20, 6000 + seed);
    FlowNetwork a = to_flow_network(g, "v0", "v1");
    FlowNetwork b = to_flow_network(g, "v0", "v1");
    CutResult ca = min_cut(a, FlowAlgorithm::AugmentingPath);
    CutResult cb = min_cut(b, FlowAlgorithm::BlockingFlow);
    REQUIRE(ca.source_side == cb.source_side);
    REQUIRE(ca.cut_edges == cb.cut_edges);
    REQUIRE(ca.weight == cb.weight);
  }
}

TEST_CASE("cut_edges are exactly the boundary of the source side") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = int_graph(9, 45, 1, 9, 7000 + seed);
    FlowNetwork net = to_flow_network(g, "v0", "v8");
    CutResult cut = min_cut(net);
    std::vector<EdgeKey> boundary;
    Weight boundary_weight = 0.0;
    for (const auto& [key, w] : g.edges()) {
      if (cut.source_side.count(key.first) !=
          cut.source_side.count(key.second)) {
        boundary.push_back(key);
        boundary_weight += w;
      }
    }
    REQUIRE(cut.cut_edges == boundary);
    REQUIRE(cut.weight == boundary_weight);
    REQUIRE(cut.source_side.count("v0") == 1);
    REQUIRE(cut.source_side.count("v8") == 0);
  }
}
