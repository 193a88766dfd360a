#include <gtest/gtest.h>

#include <set>

#include "dsnkit/corpus.hpp"
#include "dsnkit/errors.hpp"
#include "dsnkit/formats.hpp"
#include "dsnkit/generators.hpp"
#include "dsnkit/undirected.hpp"

using namespace dsnkit;

TEST(Generators, RandomIsDeterministicPerSeed) {
  RandomSpec spec;
  spec.seed = 7;
  spec.fractional = true;
  EXPECT_EQ(emit_dsn(random_instance(spec)), emit_dsn(random_instance(spec)));
  RandomSpec other = spec;
  other.seed = 8;
  EXPECT_NE(emit_dsn(random_instance(spec)), emit_dsn(random_instance(other)));
  EXPECT_EQ(random_instance(spec).meta().seed, std::optional<std::uint64_t>(7));
}

TEST(Generators, RandomRespectsCountsAndCoversTerminals) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomSpec spec;
    spec.vertices = 9;
    spec.arcs = 20;
    spec.terminals = 4;
    spec.requests = 5;
    spec.seed = seed;
    DsnInstance inst = random_instance(spec);
    EXPECT_EQ(inst.host().vertex_count(), 9u);
    EXPECT_EQ(inst.host().arc_count(), 20u);
    EXPECT_EQ(inst.q(), 4u);
    EXPECT_EQ(inst.p(), 5u);
    for (const Arc& a : inst.host().arcs()) {
      EXPECT_GE(a.weight, Weight(1));
      EXPECT_LE(a.weight, Weight(5));
    }
  }
  RandomSpec bad;
  bad.terminals = 3;
  bad.requests = 1;
  EXPECT_THROW(random_instance(bad), InputError);
}

TEST(Generators, OutStarHasOneRoot) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    DsnInstance inst = random_out_star(9, 18, 3, seed);
    EXPECT_TRUE(is_out_star(inst));
    EXPECT_EQ(inst.q(), 4u);
  }
}

TEST(Generators, GridIsStampedPlanarBidirected) {
  DsnInstance inst = grid_instance(3, 4, 4, 5);
  EXPECT_EQ(inst.meta().genus, std::optional<int>(0));
  EXPECT_EQ(inst.host().vertex_count(), 12u);
  EXPECT_EQ(inst.host().arc_count(), 2u * (2 * 4 + 3 * 3));
  for (const Arc& a : inst.host().arcs()) EXPECT_TRUE(inst.host().has_arc(a.head, a.tail));
  EXPECT_EQ(inst.q(), 4u);
  EXPECT_EQ(inst.p(), 4u);
}

TEST(Generators, LadderDemoHostIsTheLadderPlusTwoTerminals) {
  DsnInstance inst = ladder_demo(6);
  Ladder l = make_ladder(6);
  EXPECT_EQ(inst.host().vertex_count(), l.graph.vertex_count() + 2);
  EXPECT_EQ(inst.host().arc_count(), l.graph.arc_count() + 4);
  EXPECT_EQ(inst.p(), 2u);
  auto all = SolutionSubgraph::all_arcs(inst.host());
  EXPECT_TRUE(validate(inst, all).valid);
  EXPECT_TRUE(is_inclusion_minimal(inst, all));
}

TEST(Generators, RandomPsiPlantsWhenAsked) {
  UndirectedGraph k4 = pattern_by_name("k4");
  PsiSpec spec;
  spec.host_vertices = 10;
  spec.plant = true;
  spec.seed = 3;
  PsiInstance psi = random_psi(k4, spec);
  EXPECT_EQ(psi.host.vertex_count(), 10u);
  std::set<Vertex> classes(psi.classes.begin(), psi.classes.end());
  EXPECT_EQ(classes.size(), 4u);
  EXPECT_EQ(emit_psi(psi), emit_psi(random_psi(k4, spec)));
}

TEST(Corpus, SizesAndDeterminism) {
  EXPECT_EQ(random_corpus(12).size(), 12u);
  EXPECT_EQ(random_corpus(12), random_corpus(12));
  EXPECT_EQ(out_star_corpus(5).size(), 5u);
  for (const DsnInstance& inst : planar_corpus()) EXPECT_EQ(inst.meta().genus, std::optional<int>(0));
  auto ladders = ladder_corpus(30);
  std::set<std::size_t> plain;
  for (const LadderCase& c : ladders)
    if (c.identified.empty()) plain.insert(c.n);
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_TRUE(plain.count(n)) << n;
  auto psi = psi_corpus(2, {4});
  EXPECT_EQ(psi.size(), 2u);
}
