#include <gtest/gtest.h>

#include <algorithm>

#include "dsnkit/errors.hpp"
#include "dsnkit/generators.hpp"
#include "dsnkit/instance.hpp"
#include "dsnkit/ladder.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dsnkit;
using fixtures::digraph;

namespace {

std::vector<DsnInstance> ten_vertex_instances() {
  std::vector<DsnInstance> out;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomSpec spec;
    spec.vertices = 10;
    spec.arcs = 26;
    spec.terminals = 2 + seed % 3;
    spec.requests = spec.terminals == 2 ? 2 : spec.terminals + 1;
    spec.seed = seed;
    spec.fractional = seed % 2 == 0;
    out.push_back(random_instance(spec));
  }
  return out;
}

DsnInstance ladder_scc(const Ladder& l) {
  std::vector<Vertex> c = l.corners();
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::vector<Request> req;
  for (Vertex s : c)
    for (Vertex t : c)
      if (s != t) req.push_back({s, t});
  return DsnInstance(l.graph, req);
}

}  // namespace

TEST(Instance, RejectsLoopRequestsAndUnknownEndpoints) {
  auto g = digraph(3, {{0, 1}});
  EXPECT_THROW(DsnInstance(g, {{1, 1}}), InputError);
  EXPECT_THROW(DsnInstance(g, {{0, 9}}), InputError);
  EXPECT_THROW(DsnInstance(g, {{0, 1}, {0, 1}}), InputError);
  DsnInstance ok(g, {{0, 2}, {1, 0}});
  EXPECT_EQ(ok.q(), 3u);
  EXPECT_EQ(ok.p(), 2u);
}

TEST(Validate, EmptyRequestsAreSatisfiedByNothing) {
  DsnInstance inst(digraph(2, {{0, 1}}), {});
  EXPECT_TRUE(validate(inst, SolutionSubgraph{}).valid);
}

TEST(Validate, DirectionMatters) {
  auto g = digraph(2, {{0, 1}, {1, 0}});
  DsnInstance inst(g, {{0, 1}});
  EXPECT_TRUE(validate(inst, SolutionSubgraph::from_pairs(g, {{0, 1}})).valid);
  Verdict v = validate(inst, SolutionSubgraph::from_pairs(g, {{1, 0}}));
  EXPECT_FALSE(v.valid);
  ASSERT_TRUE(v.violated);
  EXPECT_EQ(*v.violated, (Request{0, 1}));
}

TEST(Validate, ReportsLexicographicallyFirstViolation) {
  auto g = digraph(4, {{0, 1}, {2, 3}});
  DsnInstance inst(g, {{2, 3}, {0, 3}, {0, 1}});
  Verdict v = validate(inst, SolutionSubgraph{});
  ASSERT_TRUE(v.violated);
  EXPECT_EQ(*v.violated, (Request{0, 1}));
}

TEST(Validate, ArcOutsideHostIsInputError) {
  DsnInstance inst(digraph(2, {{0, 1}}), {{0, 1}});
  EXPECT_THROW(validate(inst, SolutionSubgraph({5})), InputError);
  EXPECT_THROW(SolutionSubgraph::from_pairs(inst.host(), {{1, 0}}), InputError);
}

TEST(Validate, WholeLadderServesCornerCycle) {
  Ladder l = make_ladder(6);
  Vertex a1 = l.a[1], b1 = l.b[1], a6 = l.a[6], b6 = l.b[6];
  DsnInstance inst(l.graph, {{a1, b1}, {b1, a6}, {a6, b6}, {b6, a1}});
  auto all = SolutionSubgraph::all_arcs(l.graph);
  EXPECT_TRUE(validate(inst, all).valid);
  EXPECT_TRUE(oracle::valid(inst, oracle::arc_pairs(l.graph)));
}

TEST(Cost, SumsWeights) {
  auto g = fixtures::weighted(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, Weight(5, 2)}});
  DsnInstance inst(g, {{0, 3}});
  EXPECT_EQ(cost(inst, SolutionSubgraph{}), Weight(0));
  EXPECT_EQ(cost(inst, SolutionSubgraph({0, 2, 3})), Weight(3));
  EXPECT_EQ(cost(inst, SolutionSubgraph({1})), Weight(5, 2));
}

TEST(InclusionMinimal, ShortestPathAndUnusedArc) {
  auto g = digraph(5, {{0, 1}, {1, 2}, {3, 4}});
  DsnInstance inst(g, {{0, 2}});
  EXPECT_TRUE(is_inclusion_minimal(inst, SolutionSubgraph::from_pairs(g, {{0, 1}, {1, 2}})));
  EXPECT_FALSE(is_inclusion_minimal(inst, SolutionSubgraph::all_arcs(g)));
  EXPECT_THROW(is_inclusion_minimal(inst, SolutionSubgraph{}), PreconditionError);
}

TEST(InclusionMinimal, LaddersConnectTheirCornersMinimally) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::vector<std::size_t> ident : {std::vector<std::size_t>{}, {n / 2}, {1, n}}) {
      if (ident.size() == 2 && n < 3) continue;
      Ladder l = make_ladder(n, ident);
      DsnInstance inst = ladder_scc(l);
      auto all = SolutionSubgraph::all_arcs(l.graph);
      EXPECT_TRUE(is_inclusion_minimal(inst, all)) << "n=" << n;
      EXPECT_TRUE(oracle::inclusion_minimal(inst, oracle::arc_pairs(l.graph))) << "n=" << n;
    }
  }
}

TEST(Minimize, LeavesMinimalInputAlone) {
  auto g = digraph(3, {{0, 1}, {1, 2}});
  DsnInstance inst(g, {{0, 2}});
  auto sol = SolutionSubgraph::all_arcs(g);
  EXPECT_EQ(minimize(inst, sol), sol);
}

TEST(Minimize, WholeHostCollapsesToOnePath) {
  auto g = digraph(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}, {2, 1}});
  DsnInstance inst(g, {{0, 4}});
  auto m = minimize(inst, SolutionSubgraph::all_arcs(g));
  // Single path: every vertex has at most one out-arc, and it is minimal.
  auto h = solution_graph(inst, m);
  for (Vertex v = 0; v < 5; ++v) EXPECT_LE(h.out_degree(v), 1u);
  EXPECT_TRUE(validate(inst, m).valid);
  EXPECT_TRUE(oracle::inclusion_minimal(inst, oracle::arc_pairs(g, m)));
}

TEST(Minimize, RejectsInvalidInput) {
  DsnInstance inst(digraph(2, {{0, 1}}), {{0, 1}});
  EXPECT_THROW(minimize(inst, SolutionSubgraph{}), PreconditionError);
}

TEST(Minimize, RandomSupersetsBecomeMinimalIdempotentAndNoDearer) {
  for (const DsnInstance& inst : ten_vertex_instances()) {
    auto all = SolutionSubgraph::all_arcs(inst.host());
    if (!validate(inst, all).valid) continue;
    auto m = minimize(inst, all);
    EXPECT_TRUE(std::includes(all.arcs().begin(), all.arcs().end(), m.arcs().begin(), m.arcs().end()));
    EXPECT_TRUE(oracle::valid(inst, oracle::arc_pairs(inst.host(), m)));
    EXPECT_TRUE(oracle::inclusion_minimal(inst, oracle::arc_pairs(inst.host(), m)));
    EXPECT_EQ(minimize(inst, m), m);
    EXPECT_LE(cost(inst, m), cost(inst, all));
    EXPECT_EQ(cost(inst, m) == cost(inst, all), m == all);
  }
}

TEST(Normalize, SingleArc) {
  auto g = digraph(2, {{0, 1}});
  std::vector<Vertex> t{0, 1};
  EXPECT_EQ(normalize_requests(g, t), (std::vector<Request>{{0, 1}}));
}

TEST(Normalize, PathThroughTerminalSplits) {
  // s=0 -> x=1 -> u=2 -> t=3 with u a terminal.
  auto g = digraph(4, {{0, 1}, {1, 2}, {2, 3}});
  std::vector<Vertex> t{0, 2, 3};
  EXPECT_EQ(normalize_requests(g, t), (std::vector<Request>{{0, 2}, {2, 3}}));
}

TEST(Normalize, KeepsMinimalityAndCommutesWithReversal) {
  for (const DsnInstance& inst : ten_vertex_instances()) {
    auto all = SolutionSubgraph::all_arcs(inst.host());
    if (!validate(inst, all).valid) continue;
    auto m = minimize(inst, all);
    auto normalized = normalize_requests(inst, m);
    DsnInstance again(inst.host(), normalized);
    EXPECT_TRUE(is_inclusion_minimal(again, m));
    EXPECT_TRUE(oracle::inclusion_minimal(again, oracle::arc_pairs(inst.host(), m)));
    DsnInstance back = reverse(inst);
    auto flipped = reverse_solution(inst, m);
    EXPECT_EQ(normalize_requests(back, flipped), reverse_requests(normalized));
  }
}

TEST(Reverse, InvolutionPreservingCostValidityMinimality) {
  for (const DsnInstance& inst : ten_vertex_instances()) {
    EXPECT_EQ(reverse(reverse(inst)), inst);
    auto all = SolutionSubgraph::all_arcs(inst.host());
    if (!validate(inst, all).valid) continue;
    auto m = minimize(inst, all);
    DsnInstance back = reverse(inst);
    auto flipped = reverse_solution(inst, m);
    EXPECT_EQ(cost(back, flipped), cost(inst, m));
    EXPECT_TRUE(validate(back, flipped).valid);
    EXPECT_TRUE(is_inclusion_minimal(back, flipped));
    EXPECT_EQ(reverse_solution(back, flipped), m);
  }
}
