#include "sftlab/classify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace sftlab {

const char* ClassificationVerdict::verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Isomorphic:
      return "isomorphic";
    case Verdict::NotIsomorphic:
      return "not-isomorphic";
    case Verdict::Unknown:
      return "unknown";
    case Verdict::FullShiftPossible:
      return "isomorphic-to-full-shift-possible";
  }
  return "unknown";
}

std::vector<std::pair<long, long>> factorize(long n) {
  if (n < 1) throw InvalidInput("factorize needs n >= 1");
  std::vector<std::pair<long, long>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

ClassificationVerdict fullshift_isomorphic(long m, long n) {
  if (m < 2 || n < 2) throw InvalidInput("full shifts need alphabet >= 2");
  auto fm = factorize(m), fn = factorize(n);
  ClassificationVerdict v;
  if (fm.size() != fn.size()) {
    v.verdict = ClassificationVerdict::Verdict::NotIsomorphic;
    v.reason = "prime-support-differs";
    return v;
  }
  for (size_t i = 0; i < fm.size(); ++i) {
    if (fm[i].first != fn[i].first) {
      v.verdict = ClassificationVerdict::Verdict::NotIsomorphic;
      v.reason = "prime-support-differs";
      return v;
    }
  }
  // m^k = n^j forces exponent vectors to be proportional: a_p k = b_p j
  long a0 = fm[0].second, b0 = fn[0].second;
  for (size_t i = 1; i < fm.size(); ++i) {
    if (fm[i].second * b0 != fn[i].second * a0) {
      v.verdict = ClassificationVerdict::Verdict::NotIsomorphic;
      v.reason = "exponent-vectors-not-proportional";
      return v;
    }
  }
  long g = std::gcd(a0, b0);
  long k = b0 / g, j = a0 / g;
  mpz_class mk, nj;
  mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(m),
                static_cast<unsigned long>(k));
  mpz_ui_pow_ui(nj.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(j));
  if (mk != nj) throw Error("internal", "witness failed verification");
  v.verdict = ClassificationVerdict::Verdict::Isomorphic;
  v.witness = {k, j};
  v.reason = "power-equality";
  return v;
}

namespace {

using QPoly = std::vector<mpq_class>;  // ascending degree

QPoly to_qpoly(const std::vector<mpz_class>& p) {
  QPoly q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[i] = p[i];
  return q;
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mod(QPoly a, const QPoly& b) {
  while (a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;  // monic
  }
  return a;
}

std::vector<double> real_roots(const QPoly& monic) {
  int deg = static_cast<int>(monic.size()) - 1;
  std::vector<double> out;
  if (deg < 1) return out;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -monic[i].get_d();
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
  for (int i = 0; i < deg; ++i) {
    auto z = es.eigenvalues()[i];
    if (std::abs(z.imag()) < 1e-8 * std::max(1.0, std::abs(z.real())))
      out.push_back(z.real());
  }
  return out;
}

void require_nontrivial(const PerronData& eig) {
  if (eig.lambda_lo <= 1.0 + 1e-9)
    throw TrivialShift("classification needs lambda > 1");
}

}  // namespace

ClassificationVerdict entropy_ratio_witness(const AdjacencyMatrix& a,
                                            const AdjacencyMatrix& b,
                                            long p_max, long q_max) {
  if (p_max < 1 || q_max < 1) throw InvalidInput("search bounds must be >= 1");
  require_primitive(a);
  require_primitive(b);
  PerronData ea = perron_eigendata(a, 1e-13);
  PerronData eb = perron_eigendata(b, 1e-13);
  require_nontrivial(ea);
  require_nontrivial(eb);

  ClassificationVerdict v;
  for (long p = 1; p <= p_max; ++p) {
    double alo = std::pow(ea.lambda_lo, p), ahi = std::pow(ea.lambda_hi, p);
    for (long q = 1; q <= q_max; ++q) {
      double blo = std::pow(eb.lambda_lo, q), bhi = std::pow(eb.lambda_hi, q);
      // cheap interval prefilter before the exact gcd
      double slack = 1e-7 * std::max(ahi, bhi);
      if (ahi + slack < blo || bhi + slack < alo) continue;
      QPoly g = poly_gcd(to_qpoly(characteristic_polynomial(matrix_power(a, p))),
                         to_qpoly(characteristic_polynomial(matrix_power(b, q))));
      if (g.size() < 2) continue;
      double lo = std::max(alo, blo) - slack, hi = std::min(ahi, bhi) + slack;
      bool contained = false;
      for (double root : real_roots(g))
        if (root >= lo && root <= hi) contained = true;
      if (contained) {
        v.verdict = ClassificationVerdict::Verdict::Isomorphic;
        v.witness = {p, q};
        v.reason = "shared-charpoly-factor";
        return v;
      }
    }
  }
  v.verdict = ClassificationVerdict::Verdict::Unknown;
  v.reason = "no-witness-in-range";
  return v;
}

ClassificationVerdict fullshift_obstruction(const AdjacencyMatrix& a,
                                            long k_max) {
  if (k_max < 1) throw InvalidInput("k_max must be >= 1");
  require_primitive(a);
  PerronData eig = perron_eigendata(a, 1e-13);
  require_nontrivial(eig);

  ClassificationVerdict v;
  for (long k = 1; k <= k_max; ++k) {
    std::optional<mpz_class> c;
    try {
      c = is_integer_power_perron(a, k);
    } catch (const TooLarge&) {
      // enclosure of lambda^k no longer separates consecutive integers; the
      // certificate below does not depend on the scan
      break;
    }
    if (c) {
      v.verdict = ClassificationVerdict::Verdict::FullShiftPossible;
      v.witness = {k, 1};
      v.integer_power = *c;
      v.reason = "integer-perron-power";
      return v;
    }
  }

  if (a.size() == 2) {
    // charpoly x^2 - t x + d with roots lambda and psi = d / lambda. When
    // the quadratic is irreducible and 0 < |psi| < 1, every lambda^k equals
    // trace(A^k) - psi^k with psi^k in (-1,1) \ {0}, hence never an integer.
    mpz_class t = a.trace(), d = a.determinant();
    mpz_class disc = t * t - 4 * d;
    bool irreducible = disc > 0 && !mpz_perfect_square_p(disc.get_mpz_t());
    bool modulus_ok =
        d != 0 && mpz_class(abs(d)).get_d() < eig.lambda_lo * (1.0 - 1e-12);
    if (irreducible && modulus_ok) {
      v.verdict = ClassificationVerdict::Verdict::NotIsomorphic;
      v.reason = "conjugate-modulus-certificate";
      return v;
    }
  }

  v.verdict = ClassificationVerdict::Verdict::Unknown;
  v.reason = "no-certificate; no integer power up to k_max";
  return v;
}

}  // namespace sftlab
