#include <doctest.h>

#include <cmath>
#include <set>

#include "sftlab/sofic.hpp"

using namespace sftlab;

TEST_CASE("right-resolving detection") {
  CHECK(is_right_resolving(LabeledGraph::even_shift()));
  CHECK(is_right_resolving(
      LabeledGraph::distinct_labels(AdjacencyMatrix::golden_mean())));
  // one vertex, two out-edges labeled the same
  LabeledGraph bad{EdgeGraph::from_matrix(AdjacencyMatrix::full_shift(2)),
                   {"a", "a"}};
  CHECK_FALSE(is_right_resolving(bad));
}

TEST_CASE("power labeling concatenates and preserves right-resolving") {
  LabeledGraph even = LabeledGraph::even_shift();
  LabeledGraph p2 = power_labeled(even, 2);
  std::multiset<std::string> labels(p2.labels.begin(), p2.labels.end());
  // 00, 01, 1.1 two ways (v0->v1->v0 and v1->v0->v1), 10
  CHECK(labels.count("0.0") == 1);
  CHECK(labels.count("0.1") == 1);
  CHECK(labels.count("1.1") == 2);
  CHECK(labels.count("1.0") == 1);
  CHECK(is_right_resolving(p2));
  CHECK(is_right_resolving(power_labeled(even, 5)));

  // j = 1 is the identity transform
  LabeledGraph p1 = power_labeled(even, 1);
  CHECK(p1.labels == even.labels);

  LabeledGraph f2 = power_labeled(
      LabeledGraph::distinct_labels(AdjacencyMatrix::full_shift(2)), 3);
  std::set<std::string> distinct(f2.labels.begin(), f2.labels.end());
  CHECK(distinct.size() == 8);
}

TEST_CASE("in-splitting") {
  LabeledGraph golden =
      LabeledGraph::distinct_labels(AdjacencyMatrix::golden_mean());
  // edges: 0: v0->v0, 1: v0->v1, 2: v1->v0
  SUBCASE("trivial partition renames nothing") {
    LabeledGraph s = in_split(golden, {{{0, 2}}, {{1}}});
    CHECK(s.graph.vertex_count() == 2);
    CHECK(s.graph.matrix() == golden.graph.matrix());
  }
  SUBCASE("splitting vertex 0's in-edges preserves the shift") {
    LabeledGraph s = in_split(golden, {{{0}, {2}}, {{1}}});
    CHECK(s.graph.vertex_count() == 3);
    CHECK(is_right_resolving(s));
    AdjacencyMatrix a = golden.graph.matrix();
    AdjacencyMatrix b = s.graph.matrix();
    for (long n = 1; n <= 8; ++n)
      CHECK(periodic_points(a, n) == periodic_points(b, n));
  }
  SUBCASE("invalid partitions are rejected") {
    CHECK_THROWS_AS(in_split(golden, {{{0}}, {{1}}}), InvalidPartition);
    CHECK_THROWS_AS(in_split(golden, {{{0, 2}, {2}}, {{1}}}),
                    InvalidPartition);
    CHECK_THROWS_AS(in_split(golden, {{{0, 1}}, {{2}}}), InvalidPartition);
  }
  SUBCASE("even shift stays right-resolving") {
    LabeledGraph s = in_split(LabeledGraph::even_shift(), {{{0}, {2}}, {{1}}});
    CHECK(is_right_resolving(s));
  }
}

TEST_CASE("power with min entry threshold") {
  CHECK(find_power_with_min_entry(LabeledGraph::even_shift()) == 7);
  CHECK(find_power_with_min_entry(
            LabeledGraph::distinct_labels(AdjacencyMatrix::golden_mean())) ==
        7);
  CHECK(find_power_with_min_entry(
            LabeledGraph::distinct_labels(AdjacencyMatrix::full_shift(6)),
            3) == 1);
}

TEST_CASE("tower construction on the amplified even shift") {
  LabeledGraph base = power_labeled(LabeledGraph::even_shift(), 7);
  SubgraphTower t = build_subgraph_tower(base, 3);
  REQUIRE(t.levels.size() == 3);
  // b_1 = 8/2
  CHECK(t.levels.at(1).b == 4);
  CHECK(t.levels.at(1).selected[0].size() == 4);
  // post-hoc verification covers conditions (1)(2)(3) and divisor pairs
  CHECK(verify_subgraph_tower(t) >= 3);
  // collision counts stay under the counting bound
  for (const auto& [j, level] : t.levels)
    for (long c : level.collisions) CHECK(c <= level.collision_bound);
}

TEST_CASE("distinct labels never collide") {
  AdjacencyMatrix a = AdjacencyMatrix::from_rows({{6, 6}, {6, 6}});
  SubgraphTower t = build_subgraph_tower(LabeledGraph::distinct_labels(a), 3);
  for (const auto& [j, level] : t.levels) {
    for (long c : level.collisions) CHECK(c == 0);
    mpz_class expect = matrix_power(a, j).min_entry() / 2;
    CHECK(level.selected[0].size() == expect);
  }
}

TEST_CASE("tower preconditions") {
  CHECK_THROWS_AS(build_subgraph_tower(LabeledGraph::even_shift(), 2),
                  PreconditionEntry);
  AdjacencyMatrix one = AdjacencyMatrix::full_shift(6);
  CHECK_THROWS_AS(build_subgraph_tower(LabeledGraph::distinct_labels(one), 2),
                  InvalidInput);  // r = 1
  LabeledGraph base = power_labeled(LabeledGraph::even_shift(), 7);
  CHECK_THROWS_AS(build_subgraph_tower(base, 100), InvalidInput);
}

TEST_CASE("tower growth series approaches the base entropy") {
  LabeledGraph base = power_labeled(LabeledGraph::even_shift(), 7);
  SubgraphTower t = build_subgraph_tower(base, 2);
  double target = 7.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0);

  GrowthSeries s = sofic_growth_series(t, {8, 15, 16, 30});
  REQUIRE(s.samples.size() == 4);
  CHECK(s.target_lo == doctest::Approx(target).epsilon(1e-9));
  CHECK(std::abs(s.samples[3].a_n - target) <= 0.15);
  // residual shrinks from j to 2j
  auto res = [&](size_t i) { return std::abs(s.samples[i].a_n - target); };
  CHECK(res(2) < res(0));  // 16 vs 8
  CHECK(res(3) < res(1));  // 30 vs 15

  // default sampling covers the built levels
  GrowthSeries own = sofic_growth_series(t);
  CHECK(own.samples.size() == t.levels.size());
}

TEST_CASE("deflated tower series tracks the plain growth series") {
  AdjacencyMatrix a = AdjacencyMatrix::from_rows({{6, 6}, {6, 6}});
  SubgraphTower t = build_subgraph_tower(LabeledGraph::distinct_labels(a), 1);
  GrowthSeries tower = sofic_growth_series(t, {20, 40});
  GrowthSeries plain = growth_series(a, 1, {20, 40});
  // floor(min/r) deflation costs at most ln(r)/n inside the outer log
  for (size_t i = 0; i < 2; ++i) {
    CHECK(tower.samples[i].a_n <= plain.samples[i].a_n);
    CHECK(plain.samples[i].a_n - tower.samples[i].a_n <= 0.05);
  }
}
