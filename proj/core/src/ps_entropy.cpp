#include "sftlab/ps_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sftlab {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLog10E = 0.4342944819032518;

ExtLog alt_log_order(const mpz_class& degree) {
  if (degree <= 2) return ExtLog::from_linear(1.0);
  double L = ln_mpz(degree);
  if (L < 650.0) return ExtLog::from_log(lnfact(degree) - kLn2);
  return ExtLog::from_loglog(ln_lnfact_from_ln(L));
}

}  // namespace

ExtLog ProductOfAlternating::total_log_order() const {
  return log_alt_order(degrees);
}

ProductOfAlternating simp_ev_group(const AdjacencyMatrix& a, long k) {
  require_primitive(a);
  AdjacencyMatrix ak = matrix_power(a, k);
  ProductOfAlternating g;
  for (const auto& e : ak.entries()) {
    if (e <= 1) {
      ++g.dropped;
      continue;
    }
    g.degrees.push_back(e);
    g.simple.push_back(e >= 5);
    g.log_orders.push_back(alt_log_order(e));
  }
  return g;
}

bool is_ps_member(const ProductOfAlternating& g, const PSParams& p) {
  if (static_cast<int>(g.degrees.size()) != p.r) return false;
  for (bool s : g.simple)
    if (!s) return false;
  double lmin = std::numeric_limits<double>::infinity(), lmax = 0;
  for (const auto& lo : g.log_orders) {
    double l = lo.log();
    lmin = std::min(lmin, l);
    lmax = std::max(lmax, l);
  }
  return lmax <= p.D * lmin && lmin >= p.C * lmax;
}

AdmissibleResult admissible_params(const AdjacencyMatrix& a, double epsilon,
                                   long k_max) {
  if (!(epsilon > 0 && epsilon < 1))
    throw InvalidInput("epsilon must lie in (0,1)");
  require_primitive(a);
  PerronData eig = perron_eigendata(a);
  double vmin = *std::min_element(eig.vu.begin(), eig.vu.end());
  double vmax = *std::max_element(eig.vu.begin(), eig.vu.end());
  double rho_min = vmin / vmax, rho_max = vmax / vmin;
  double C, D;
  if (a.size() == 1) {
    C = D = 1.0;  // ratio set is {1}
  } else {
    C = std::min(1.0, rho_min * (1.0 - epsilon));
    D = std::max(1.0, rho_max * (1.0 + epsilon));
  }
  PSParams params(C, D, a.size() * a.size());

  // least K with membership on all of [K, k_max]
  long K = -1;
  AdjacencyMatrix ak = a;
  for (long k = k_max; k >= 1; --k) {
    if (is_ps_member(simp_ev_group(a, k), params)) {
      K = k;
    } else {
      break;
    }
  }
  if (K < 0)
    throw AdmissibilityNotReached("membership fails at k_max = " +
                                  std::to_string(k_max));
  return AdmissibleResult{params, K, rho_min, rho_max};
}

GrowthSeries growth_series(const AdjacencyMatrix& a, long k,
                           const std::vector<long>& n_list,
                           const GrowthOptions& opts) {
  require_primitive(a);
  PerronData eig = perron_eigendata(a);
  if (eig.lambda_lo <= 1.0 + 1e-9)
    throw TrivialShift("growth series needs lambda > 1");
  {
    // some A^{km} must have an entry >= 3 so the alternating factors are
    // eventually nontrivial; one doubling ladder suffices at lambda > 1
    AdjacencyMatrix akm = matrix_power(a, k);
    bool big_enough = akm.max_entry() >= 3;
    for (int step = 0; !big_enough && step < 64; ++step) {
      akm = matrix_multiply(akm, akm);
      big_enough = akm.max_entry() >= 3;
    }
    if (!big_enough) throw EntryTooSmall("no power of A^k has an entry >= 3");
  }

  double log10_lambda = std::log10(eig.lambda_hi);
  double lnl = std::log(eig.lambda_mid());
  int r = a.size();

  // calibration for the log-domain approximation: measured deviation at a
  // modest exact checkpoint, decayed by the spectral gap
  double q_ratio = 1.0, delta0 = 0.0;
  long checkpoint = 0;
  if (r > 1) {
    q_ratio = std::min(1.0, second_eigenvalue_modulus(a) / eig.lambda_lo *
                                1.05);  // numeric slack
    checkpoint =
        std::max<long>(1, static_cast<long>(200.0 / log10_lambda / 1.0));
    checkpoint = std::min<long>(checkpoint, 2000);
    AdjacencyMatrix ac = matrix_power(a, checkpoint);
    for (int i = 0; i < r * r; ++i) {
      double pred = checkpoint * lnl + std::log(eig.vu[i]);
      double actual = ln_mpz(ac.entries()[i]);
      delta0 = std::max(delta0, std::abs(actual - pred));
    }
  }

  GrowthSeries s{a, k, {}, k * std::log(eig.lambda_lo),
                 k * std::log(eig.lambda_hi)};
  for (long n : n_list) {
    long power = k * n;
    double est_digits = power * log10_lambda + 2;
    GrowthSample sample{n, 0.0, ExtLog::from_linear(1.0), true};
    bool can_approx =
        r == 1 ? false
               : delta0 * std::pow(q_ratio, std::max(0L, power - checkpoint)) <
                     opts.approx_rel_tol;
    if (est_digits <= static_cast<double>(opts.digit_budget)) {
      AdjacencyMatrix an = matrix_power(a, power);
      sample.order = log_alt_order(an.entries());
      sample.exact = true;
    } else if (can_approx || r == 1) {
      std::vector<double> ln_sizes;
      if (r == 1) {
        ln_sizes.push_back(power * ln_mpz(a.at(0, 0)));
      } else {
        for (int i = 0; i < r * r; ++i)
          ln_sizes.push_back(power * lnl + std::log(eig.vu[i]));
      }
      sample.order = log_alt_order_from_ln(ln_sizes);
      sample.exact = false;
    } else {
      throw ResourceCap(
          "entry digits exceed budget and approximation is not certified at "
          "n = " +
          std::to_string(n));
    }
    // ln ln of a trivial or order-2 group is undefined; drop such samples
    // (only tiny n can produce them once lambda > 1)
    try {
      sample.a_n = sample.order.loglog() / static_cast<double>(n);
    } catch (const InvalidInput&) {
      continue;
    }
    s.samples.push_back(std::move(sample));
  }
  std::sort(s.samples.begin(), s.samples.end(),
            [](const GrowthSample& x, const GrowthSample& y) {
              return x.n < y.n;
            });
  return s;
}

EntropyFit entropy_estimate(const GrowthSeries& s) {
  if (s.samples.size() < 4)
    throw InsufficientSamples("entropy fit needs >= 4 samples");
  size_t start = s.samples.size() / 2;
  // least squares for a_n = h + beta ln(n)/n
  double sxx = 0, sx = 0, sxy = 0, sy = 0, n = 0;
  for (size_t i = start; i < s.samples.size(); ++i) {
    double x = std::log(static_cast<double>(s.samples[i].n)) /
               static_cast<double>(s.samples[i].n);
    double y = s.samples[i].a_n;
    sxx += x * x;
    sx += x;
    sxy += x * y;
    sy += y;
    n += 1;
  }
  double det = n * sxx - sx * sx;
  EntropyFit fit{};
  if (std::abs(det) < 1e-300) {
    fit.h_hat = sy / n;
    fit.beta = 0;
  } else {
    fit.beta = (n * sxy - sx * sy) / det;
    fit.h_hat = (sy - fit.beta * sx) / n;
  }
  fit.max_residual = 0;
  for (size_t i = start; i < s.samples.size(); ++i) {
    double x = std::log(static_cast<double>(s.samples[i].n)) /
               static_cast<double>(s.samples[i].n);
    fit.max_residual = std::max(
        fit.max_residual,
        std::abs(s.samples[i].a_n - fit.h_hat - fit.beta * x));
  }
  return fit;
}

UpperBoundReport upper_bound_check(const AdjacencyMatrix& a,
                                   const std::vector<long>& n_list,
                                   const PSParams& p) {
  require_primitive(a);
  PerronData eig = perron_eigendata(a);
  if (eig.lambda_lo <= 1.0 + 1e-9) throw TrivialShift();
  const double ln_rd = std::log(p.r * p.D);
  UpperBoundReport rep;
  for (long n : n_list) {
    AdjacencyMatrix an = matrix_power(a, n);
    ExtLog order = log_alt_order(an.entries());
    mpz_class pn = an.trace();
    UpperBoundRow row{n, false, false, 0, 0, 0, 0};
    bool trivial_order =
        order.regime() == ExtLog::Regime::Linear && order.raw() <= 1.0;
    double neg_inf = -std::numeric_limits<double>::infinity();
    // (i) compared in the ln-ln domain so huge orders stay representable
    double ln_pn = pn >= 1 ? ln_mpz(pn) : neg_inf;
    double ln_lnfact_pn =
        pn >= 2 ? (ln_pn < 650.0 ? std::log(lnfact(pn))
                                 : ln_lnfact_from_ln(ln_pn))
                : neg_inf;
    row.lhs_i = trivial_order ? neg_inf : order.loglog();
    row.rhs_i = ln_rd + ln_lnfact_pn;
    row.holds_i = row.lhs_i <= row.rhs_i;
    double ln_ln_pn = (pn >= 2) ? std::log(ln_pn) : neg_inf;
    row.lhs_ii = trivial_order ? neg_inf : order.loglog();
    row.rhs_ii = ln_rd + ln_pn + ln_ln_pn;
    row.holds_ii = row.lhs_ii <= row.rhs_ii;
    rep.rows.push_back(row);
  }
  for (const auto& row : rep.rows) {
    if (rep.first_n_i < 0 && row.holds_i) rep.first_n_i = row.n;
    if (rep.first_n_ii < 0 && row.holds_ii) rep.first_n_ii = row.n;
    if (rep.first_n_i >= 0 && row.n > rep.first_n_i && !row.holds_i)
      rep.violations_after_i.push_back(row.n);
    if (rep.first_n_ii >= 0 && row.n > rep.first_n_ii && !row.holds_ii)
      rep.violations_after_ii.push_back(row.n);
  }
  return rep;
}

std::vector<long> first_primes(int count) {
  std::vector<long> primes;
  for (long c = 2; static_cast<int>(primes.size()) < count; ++c) {
    bool is_p = true;
    for (long p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        is_p = false;
        break;
      }
    }
    if (is_p) primes.push_back(c);
  }
  return primes;
}

std::vector<PartitionSample> partition_example_growth(
    long a, long q, int prime_count, const std::vector<long>& j_list) {
  if (a < 2) throw InvalidInput("base a must be >= 2");
  if (prime_count < 1 || prime_count > 50)
    throw InvalidInput("prime_count must be in [1, 50]");
  auto primes = first_primes(prime_count);
  {  // q must be prime
    bool qp = q >= 2;
    for (long d = 2; d * d <= q; ++d)
      if (q % d == 0) qp = false;
    if (!qp) throw InvalidInput("q must be prime");
  }
  double ln_q = std::log(static_cast<double>(q));
  std::vector<PartitionSample> out;
  for (long j : j_list) {
    mpz_class s = 1;  // the distinguished always-commuting q-cycle
    for (long p : primes) {
      if (j % p != 0) continue;
      mpz_class pow;
      mpz_ui_pow_ui(pow.get_mpz_t(), static_cast<unsigned long>(a),
                    static_cast<unsigned long>(p));
      mpz_class f = p * pow;
      mpz_fdiv_q_ui(f.get_mpz_t(), f.get_mpz_t(),
                    static_cast<unsigned long>(q));
      s += f;
    }
    PartitionSample ps{j, 0.0, true, s};
    // order q^s; a_j = (1/j) ln(s ln q), defined when s ln q > 1
    double ln_s = ln_mpz(s);
    if (ln_s + std::log(ln_q) <= 0.0 || s * ln_q <= mpz_class(1)) {
      ps.representable = (ln_s + std::log(ln_q) > 0.0);
    }
    if (std::exp(std::min(ln_s, 700.0)) * ln_q <= 1.0 && s < 1000000) {
      ps.representable = false;
      ps.a_j = std::numeric_limits<double>::quiet_NaN();
    } else {
      ps.representable = true;
      ps.a_j = (ln_s + std::log(ln_q)) / static_cast<double>(j);
    }
    out.push_back(std::move(ps));
  }
  return out;
}

}  // namespace sftlab
