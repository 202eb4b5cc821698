#ifndef SFTLAB_PS_ENTROPY_HPP
#define SFTLAB_PS_ENTROPY_HPP

#include <vector>

#include "sftlab/extlog.hpp"
#include "sftlab/matrix.hpp"
#include "sftlab/perron.hpp"

namespace sftlab {

/// Parameters (C, D, r) cutting out a class of products of r finite simple
/// non-abelian groups with pairwise log-order ratios in [C, D].
struct PSParams {
  double C;
  double D;
  int r;

  PSParams(double c, double d, int r_) : C(c), D(d), r(r_) {
    if (!(C > 0 && C <= 1.0 && D >= 1.0 && r >= 1))
      throw InvalidInput("PS params need 0 < C <= 1 <= D and r >= 1");
  }
};

/// Product of alternating groups Alt(degree). Degrees <= 1 are dropped as
/// trivial; degrees 2..4 are retained with their orders but flagged
/// non-simple.
struct ProductOfAlternating {
  std::vector<mpz_class> degrees;   // retained degrees (>= 2)
  std::vector<bool> simple;         // degree >= 5
  std::vector<ExtLog> log_orders;   // per retained factor
  int dropped = 0;                  // degrees <= 1

  ExtLog total_log_order() const;
};

bool is_ps_member(const ProductOfAlternating& g, const PSParams& p);

/// Simp_ev(Gamma^(k)) as a product of alternating groups: one factor per
/// entry of A^k.
ProductOfAlternating simp_ev_group(const AdjacencyMatrix& a, long k);

struct AdmissibleResult {
  PSParams params;
  long K;  // least K with membership for every k in [K, k_max]
  double rho_min, rho_max;  // extreme ratios of the vu outer product
};

/// Parameter search: C, D from the vu-ratio limits inflated by epsilon,
/// r = size^2, K verified operationally through k_max.
AdmissibleResult admissible_params(const AdjacencyMatrix& a, double epsilon,
                                   long k_max);

struct GrowthSample {
  long n;
  double a_n;      // (1/n) ln ln |Simp_ev(Gamma^(kn))|
  ExtLog order;    // |Simp_ev(Gamma^(kn))|
  bool exact;      // big-integer entries vs log-domain Perron approximation
};

struct GrowthSeries {
  AdjacencyMatrix base;
  long k;
  std::vector<GrowthSample> samples;
  double target_lo, target_hi;  // enclosure of k log lambda_A
};

struct GrowthOptions {
  long digit_budget = 100000;   // max decimal digits per exact entry
  double approx_rel_tol = 1e-9; // certified bound to switch to log-domain
};

GrowthSeries growth_series(const AdjacencyMatrix& a, long k,
                           const std::vector<long>& n_list,
                           const GrowthOptions& opts = {});

struct EntropyFit {
  double h_hat;
  double beta;
  double max_residual;  // against the fitted model, last half of samples
};

/// Fits a_n = h + beta ln(n)/n by least squares on the last half of samples.
EntropyFit entropy_estimate(const GrowthSeries& s);

struct UpperBoundRow {
  long n;
  bool holds_i;   // ln|Simp_ev| <= r D lnfact(p_n)
  bool holds_ii;  // ln ln|Simp_ev| <= ln(rD) + ln p_n + ln ln p_n
  double lhs_i, rhs_i, lhs_ii, rhs_ii;
};

struct UpperBoundReport {
  std::vector<UpperBoundRow> rows;
  long first_n_i = -1;   // first sampled n from which (i) holds onward
  long first_n_ii = -1;
  std::vector<long> violations_after_i, violations_after_ii;
};

UpperBoundReport upper_bound_check(const AdjacencyMatrix& a,
                                   const std::vector<long>& n_list,
                                   const PSParams& p);

struct PartitionSample {
  long j;
  double a_j;
  bool representable;  // false when ln ln of the order is undefined
  mpz_class s;         // exponent: |H cap C(tau^j)| = q^s
};

/// Closed-form growth oracle for the constructed product-of-q-cycles
/// subgroup of the partition example; evaluated per j.
std::vector<PartitionSample> partition_example_growth(
    long a, long q, int prime_count, const std::vector<long>& j_list);

/// First `count` primes.
std::vector<long> first_primes(int count);

}  // namespace sftlab

#endif
