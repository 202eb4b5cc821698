#include <doctest.h>

#include <algorithm>
#include <set>

#include "sftlab/group_oracle.hpp"

using namespace sftlab;

namespace {

// diagonal copy of Alt(5) inside Alt(5) x Alt(5) on 10 points
ExplicitGroup diagonal_alt5() {
  ExplicitGroup a5 = ExplicitGroup::alternating(5);
  std::vector<Perm> gens;
  for (const Perm& p : a5.elements()) {
    Perm q(10);
    for (int i = 0; i < 5; ++i) {
      q[i] = p[i];
      q[5 + i] = static_cast<uint8_t>(5 + p[i]);
    }
    gens.push_back(std::move(q));
  }
  return ExplicitGroup(10, gens, "diag");
}

ExplicitGroup left_alt5_factor() {
  ExplicitGroup a5 = ExplicitGroup::alternating(5);
  std::vector<Perm> gens;
  for (const Perm& p : a5.elements()) {
    Perm q(10);
    for (int i = 0; i < 5; ++i) q[i] = p[i];
    for (int i = 5; i < 10; ++i) q[i] = static_cast<uint8_t>(i);
    gens.push_back(std::move(q));
  }
  return ExplicitGroup(10, gens, "Alt5x1");
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(ExplicitGroup::alternating(5).order() == 60);
  CHECK(ExplicitGroup::alternating(4).order() == 12);
  CHECK(ExplicitGroup::symmetric(5).order() == 120);
  ExplicitGroup a5 = ExplicitGroup::alternating(5);
  CHECK(ExplicitGroup::product(a5, a5).order() == 3600);
  CHECK_THROWS_AS(ExplicitGroup::symmetric(13), TooLarge);
}

TEST_CASE("groups are closed under composition and inverse") {
  ExplicitGroup a4 = ExplicitGroup::alternating(4);
  for (const Perm& p : a4.elements()) {
    CHECK(a4.contains(perm_inverse(p)));
    for (const Perm& q : a4.elements())
      CHECK(a4.contains(perm_compose(p, q)));
  }
}

TEST_CASE("normal subgroup enumeration") {
  CHECK(normal_subgroups(ExplicitGroup::alternating(5)).size() == 2);
  CHECK(is_simple(ExplicitGroup::alternating(5)));
  CHECK_FALSE(is_simple(ExplicitGroup::symmetric(5)));
  CHECK_FALSE(is_simple(ExplicitGroup::alternating(4)));
  // Sym2 is the cyclic group of order 2
  CHECK(normal_subgroups(ExplicitGroup::symmetric(2)).size() == 2);
  // Sym4 has 1, V4, Alt4, Sym4
  CHECK(normal_subgroups(ExplicitGroup::symmetric(4)).size() == 4);
}

TEST_CASE("Alt5 squared has exactly the four sub-product normal subgroups") {
  ExplicitGroup a5 = ExplicitGroup::alternating(5);
  ExplicitGroup sq = ExplicitGroup::product(a5, a5);
  auto normals = normal_subgroups(sq);
  REQUIRE(normals.size() == 4);
  std::set<size_t> sizes;
  for (const auto& n : normals) sizes.insert(n.size());
  CHECK(sizes == std::set<size_t>{1, 60, 3600});
  CHECK(verify_smallisland(1));
  CHECK(verify_smallisland(2));
}

TEST_CASE("normal subgroup lattice closure") {
  ExplicitGroup a5 = ExplicitGroup::alternating(5);
  ExplicitGroup sq = ExplicitGroup::product(a5, a5);
  auto normals = normal_subgroups(sq);
  // closed under intersection
  for (const auto& x : normals)
    for (const auto& y : normals) {
      std::vector<Perm> meet;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(meet));
      bool found = false;
      for (const auto& n : normals)
        if (n == meet) found = true;
      CHECK(found);
    }
}

TEST_CASE("non-simple factors are rejected") {
  std::vector<ExplicitGroup> bad{ExplicitGroup::symmetric(5)};
  CHECK_THROWS_AS(verify_smallisland(bad), NotSimple);
  CHECK_THROWS_AS(verify_smallisland(3), InvalidInput);
}

TEST_CASE("simple subgroup meeting a normal subgroup lies inside it") {
  ExplicitGroup a5 = ExplicitGroup::alternating(5);
  ExplicitGroup sq = ExplicitGroup::product(a5, a5);
  ExplicitGroup left = left_alt5_factor();
  std::vector<Perm> n(left.elements());

  // diagonal meets the left factor trivially: implication is vacuous
  CHECK(verify_pondlight(sq, n, diagonal_alt5()));
  // the factor meets itself: containment must hold
  CHECK(verify_pondlight(sq, n, left));
  // N = G: every simple subgroup is inside
  CHECK(verify_pondlight(sq, std::vector<Perm>(sq.elements()), diagonal_alt5()));

  // a non-normal subgroup is rejected
  CHECK_THROWS_AS(verify_pondlight(sq, std::vector<Perm>(diagonal_alt5().elements()),
                                   left),
                  NotNormal);
  // a non-simple H is rejected
  ExplicitGroup klein(10, {{1, 0, 3, 2, 4, 5, 6, 7, 8, 9},
                           {0, 1, 2, 3, 5, 4, 7, 6, 8, 9}},
                      "V4");
  CHECK_THROWS_AS(verify_pondlight(sq, n, klein), NotSimple);
}

TEST_CASE("kernel lemma truth table at toy scale") {
  PSParams p(1.0, 1.0, 1);
  // full 2-shift m=1: trivial group, vacuous
  auto r2 = verify_kernel_lemma_toy(AdjacencyMatrix::full_shift(2), {1}, p);
  REQUIRE(r2.rows.size() == 1);
  CHECK(r2.rows[0].group_order == 1);
  CHECK_FALSE(r2.rows[0].hypothesis);
  CHECK(r2.rows[0].consistent);

  // full 3-shift m=1: |Alt(3)| = 3 < 3!^1
  auto r3 = verify_kernel_lemma_toy(AdjacencyMatrix::full_shift(3), {1}, p);
  CHECK(r3.rows[0].group_order == 3);
  CHECK(r3.rows[0].p_m == 3);
  CHECK_FALSE(r3.rows[0].hypothesis);
  CHECK(r3.all_consistent);

  // full 5-shift m=1: |Alt(5)| = 60 < 120; hypothesis false, and the action
  // on the 5 fixed points is genuinely faithful
  auto r5 = verify_kernel_lemma_toy(AdjacencyMatrix::full_shift(5), {1}, p);
  CHECK(r5.rows[0].group_order == 60);
  CHECK_FALSE(r5.rows[0].hypothesis);
  CHECK_FALSE(r5.rows[0].conclusion);
  CHECK(r5.all_consistent);
}
