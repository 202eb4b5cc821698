#ifndef SFTLAB_CLASSIFY_HPP
#define SFTLAB_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>

#include "sftlab/perron.hpp"

namespace sftlab {

struct ClassificationVerdict {
  enum class Verdict {
    Isomorphic,
    NotIsomorphic,
    Unknown,
    FullShiftPossible,  // some lambda^k is an integer
  };

  Verdict verdict = Verdict::Unknown;
  std::optional<std::pair<long, long>> witness;  // exponent pair
  std::string reason;                            // stable code
  std::optional<mpz_class> integer_power;        // lambda^k when certified

  static const char* verdict_name(Verdict v);
};

/// Exact: the full m-shift and full n-shift stabilize-isomorphic iff
/// m^k = n^j for some positive integers; witness returned in lowest terms
/// and re-verified by big-integer equality.
ClassificationVerdict fullshift_isomorphic(long m, long n);

/// Bounded search for p <= p_max, q <= q_max with lambda_A^p = lambda_B^q,
/// certified by a nonconstant rational gcd of the characteristic polynomials
/// of A^p and B^q having a real root inside both spectral-radius enclosures.
/// First hit in lexicographic (p, q) order; absence gives Unknown.
ClassificationVerdict entropy_ratio_witness(const AdjacencyMatrix& a,
                                            const AdjacencyMatrix& b,
                                            long p_max, long q_max);

/// Tests lambda^k for integrality up to k_max. A 2x2 certificate (irreducible
/// quadratic, conjugate modulus in (0,1)) proves lambda^k is never an
/// integer; otherwise Unknown.
ClassificationVerdict fullshift_obstruction(const AdjacencyMatrix& a,
                                            long k_max);

/// Prime factorization by trial division, (prime, exponent) pairs ascending.
std::vector<std::pair<long, long>> factorize(long n);

}  // namespace sftlab

#endif
