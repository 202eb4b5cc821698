#include "sftlab/perron.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sftlab {

namespace {

std::vector<double> to_double(const AdjacencyMatrix& a) {
  std::vector<double> m(a.entries().size());
  for (size_t i = 0; i < m.size(); ++i) {
    m[i] = a.entries()[i].get_d();
    if (!std::isfinite(m[i]))
      throw TooLarge("matrix entry exceeds double range");
  }
  return m;
}

}  // namespace

PerronData perron_eigendata(const AdjacencyMatrix& a, double tol) {
  require_primitive(a);
  int r = a.size();
  std::vector<double> m = to_double(a);
  auto iterate = [&](bool transpose) {
    std::vector<double> x(r, 1.0), y(r);
    double lo = 0, hi = std::numeric_limits<double>::infinity();
    long iters = 0;
    const long cap = 200000;
    while (iters < cap) {
      for (int i = 0; i < r; ++i) {
        double s = 0;
        for (int j = 0; j < r; ++j)
          s += (transpose ? m[j * r + i] : m[i * r + j]) * x[j];
        y[i] = s;
      }
      double qmin = std::numeric_limits<double>::infinity(), qmax = 0;
      for (int i = 0; i < r; ++i) {
        double q = y[i] / x[i];
        qmin = std::min(qmin, q);
        qmax = std::max(qmax, q);
      }
      lo = std::max(lo, qmin);
      hi = std::min(hi, qmax);
      double norm = *std::max_element(y.begin(), y.end());
      for (int i = 0; i < r; ++i) x[i] = y[i] / norm;
      ++iters;
      if (hi - lo <= tol) break;
    }
    struct Result {
      std::vector<double> vec;
      double lo, hi;
      long iters;
    };
    return Result{x, lo, hi, iters};
  };

  auto right = iterate(false);
  auto left = iterate(true);

  PerronData d;
  d.lambda_lo = right.lo;
  d.lambda_hi = right.hi;
  d.iterations = right.iters + left.iters;
  d.tolerance = right.hi - right.lo;
  d.v = right.vec;
  d.u = left.vec;
  double dot = std::inner_product(d.u.begin(), d.u.end(), d.v.begin(), 0.0);
  for (auto& ui : d.u) ui /= dot;
  d.vu.resize(static_cast<size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) d.vu[i * r + j] = d.v[i] * d.u[j];
  return d;
}

Enclosure topological_entropy(const AdjacencyMatrix& a, double tol) {
  PerronData d = perron_eigendata(a, tol);
  return {std::log(d.lambda_lo), std::log(d.lambda_hi)};
}

std::optional<mpz_class> is_integer_power_perron(const AdjacencyMatrix& a,
                                                 long k) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  PerronData d = perron_eigendata(a, 1e-13);
  // widened enclosure of lambda^k
  double lo = std::pow(d.lambda_lo, static_cast<double>(k));
  double hi = std::pow(d.lambda_hi, static_cast<double>(k));
  lo *= 1.0 - 1e-13 * k;
  hi *= 1.0 + 1e-13 * k;
  if (!std::isfinite(hi)) throw TooLarge("lambda^k exceeds double range");
  mpz_class c_lo, c_hi;
  mpz_set_d(c_lo.get_mpz_t(), std::floor(lo));
  mpz_set_d(c_hi.get_mpz_t(), std::ceil(hi));
  if (c_hi - c_lo > 1000)
    throw TooLarge("enclosure too wide for integer-power test");
  auto cp = characteristic_polynomial(matrix_power(a, k));
  for (mpz_class c = c_lo; c <= c_hi; ++c) {
    if (c <= 0) continue;
    if (poly_eval(cp, c) == 0) return c;
  }
  return std::nullopt;
}

RootBound root_exponent_bound_fullshift(long n, long j) {
  if (n < 2) throw InvalidInput("full shift needs n >= 2");
  if (j == 0) throw InvalidInput("j must be nonzero");
  long aj = std::labs(j);
  long g0 = 0;  // gcd of prime exponents of n
  long rem = n;
  for (long p = 2; p * p <= rem; ++p) {
    if (rem % p) continue;
    long e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    g0 = std::gcd(g0, e);
  }
  if (rem > 1) g0 = std::gcd(g0, 1L);
  long g = aj * g0;
  RootBound b;
  b.k_of_j = g;
  for (long d = 1; d <= g; ++d)
    if (g % d == 0) b.feasible.push_back(d);
  return b;
}

Feasibility perron_root_feasible(const AdjacencyMatrix& a, long j, long k,
                                 double /*tol*/) {
  if (j < 1 || k < 1) throw InvalidInput("j, k must be >= 1");
  require_primitive(a);
  if (k == 1) return Feasibility::Yes;  // lambda^j is itself Perron
  auto c = is_integer_power_perron(a, j);
  if (c) {
    // lambda^j = c in Z: c^{1/k} is Perron iff it is an integer; otherwise
    // its minimal polynomial divides x^k - c and every conjugate has equal
    // modulus.
    mpz_class root;
    int exact = mpz_root(root.get_mpz_t(), c->get_mpz_t(),
                         static_cast<unsigned long>(k));
    return exact ? Feasibility::Yes : Feasibility::No;
  }
  // lambda^j irrational: the k-th roots lambda^{j/k} * zeta may or may not
  // be Galois conjugates; deciding requires algebraic factorization.
  return Feasibility::Unknown;
}

std::vector<double> eigenvalue_moduli(const AdjacencyMatrix& a) {
  int r = a.size();
  Eigen::MatrixXd m(r, r);
  auto d = to_double(a);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = d[i * r + j];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<double> mods(r);
  for (int i = 0; i < r; ++i) mods[i] = std::abs(es.eigenvalues()[i]);
  std::sort(mods.rbegin(), mods.rend());
  return mods;
}

double second_eigenvalue_modulus(const AdjacencyMatrix& a) {
  auto mods = eigenvalue_moduli(a);
  return mods.size() > 1 ? mods[1] : 0.0;
}

}  // namespace sftlab
