#include <doctest.h>

#include <cmath>

#include "sftlab/perron.hpp"

using namespace sftlab;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("golden mean enclosure pins the golden ratio") {
  PerronData eig = perron_eigendata(AdjacencyMatrix::golden_mean());
  CHECK(eig.lambda_lo <= kPhi);
  CHECK(eig.lambda_hi >= kPhi);
  CHECK(eig.lambda_hi - eig.lambda_lo <= 1e-9);
  Enclosure h = topological_entropy(AdjacencyMatrix::golden_mean());
  CHECK(h.lo <= std::log(kPhi));
  CHECK(h.hi >= std::log(kPhi));
}

TEST_CASE("full shifts give exactly n") {
  for (long n = 2; n <= 10; ++n) {
    PerronData eig = perron_eigendata(AdjacencyMatrix::full_shift(n));
    CHECK(eig.lambda_lo <= static_cast<double>(n));
    CHECK(eig.lambda_hi >= static_cast<double>(n));
    CHECK(eig.lambda_hi - eig.lambda_lo <= 1e-9);
  }
}

TEST_CASE("left and right eigenvector outer product") {
  PerronData eig = perron_eigendata(AdjacencyMatrix::golden_mean());
  // closed form: vu ratios are phi^{\pm 2} off the diagonal product
  double dot = 0;
  for (size_t i = 0; i < eig.u.size(); ++i) dot += eig.u[i] * eig.v[i];
  CHECK(dot == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(eig.vu[1] / eig.vu[0] == doctest::Approx(1.0 / kPhi).epsilon(1e-6));
  CHECK(eig.vu[0] / eig.vu[3] ==
        doctest::Approx(kPhi * kPhi).epsilon(1e-6));
}

TEST_CASE("integer powers of the Perron root") {
  CHECK(is_integer_power_perron(AdjacencyMatrix::full_shift(2), 3) == 8);
  AdjacencyMatrix g = AdjacencyMatrix::golden_mean();
  for (long k = 1; k <= 12; ++k)
    CHECK_FALSE(is_integer_power_perron(g, k).has_value());
  // [[2,2],[2,2]] has lambda = 4
  AdjacencyMatrix four = AdjacencyMatrix::from_rows({{2, 2}, {2, 2}});
  CHECK(is_integer_power_perron(four, 1) == 4);
  CHECK(is_integer_power_perron(four, 2) == 16);
}

TEST_CASE("full-shift root exponent bounds") {
  RootBound b = root_exponent_bound_fullshift(4, 1);
  CHECK(b.k_of_j == 2);
  CHECK(b.feasible == std::vector<long>{1, 2});
  CHECK(root_exponent_bound_fullshift(2, 1).k_of_j == 1);
  RootBound b82 = root_exponent_bound_fullshift(8, 2);
  CHECK(b82.k_of_j == 6);
  CHECK(b82.feasible == std::vector<long>{1, 2, 3, 6});
  CHECK(root_exponent_bound_fullshift(12, 2).k_of_j == 2);
}

TEST_CASE("root feasibility agrees with exact arithmetic on full shifts") {
  for (long n = 2; n <= 32; ++n)
    for (long j = 1; j <= 4; ++j)
      for (long k = 1; k <= 12; ++k) {
        Feasibility f =
            perron_root_feasible(AdjacencyMatrix::full_shift(n), j, k);
        mpz_class nj;
        mpz_ui_pow_ui(nj.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(j));
        mpz_class root;
        bool exact =
            mpz_root(root.get_mpz_t(), nj.get_mpz_t(),
                     static_cast<unsigned long>(k)) != 0;
        CHECK(f == (exact ? Feasibility::Yes : Feasibility::No));
      }
}

TEST_CASE("irrational golden-mean roots stay unknown for k >= 2") {
  AdjacencyMatrix g = AdjacencyMatrix::golden_mean();
  CHECK(perron_root_feasible(g, 1, 1) == Feasibility::Yes);
  CHECK(perron_root_feasible(g, 1, 2) == Feasibility::Unknown);
}

TEST_CASE("second eigenvalue modulus") {
  double mu = second_eigenvalue_modulus(AdjacencyMatrix::golden_mean());
  CHECK(mu == doctest::Approx(kPhi - 1.0).epsilon(1e-9));
  CHECK(eigenvalue_moduli(AdjacencyMatrix::full_shift(7)) ==
        std::vector<double>{7.0});
}
