#ifndef SFTLAB_PERRON_HPP
#define SFTLAB_PERRON_HPP

#include <optional>
#include <vector>

#include "sftlab/matrix.hpp"

namespace sftlab {

/// Perron-Frobenius eigendata with a certified enclosure of lambda_A.
/// Every power-iteration step yields Collatz-Wielandt bounds
/// min_i (Ax)_i/x_i <= lambda <= max_i (Ax)_i/x_i for positive x.
struct PerronData {
  double lambda_lo = 0;
  double lambda_hi = 0;
  std::vector<double> u;   // left eigenvector, normalized so u.v = 1
  std::vector<double> v;   // right eigenvector, positive
  std::vector<double> vu;  // outer product v_i u_j, r x r row-major
  long iterations = 0;
  double tolerance = 0;    // achieved enclosure width

  double lambda_mid() const { return 0.5 * (lambda_lo + lambda_hi); }
};

PerronData perron_eigendata(const AdjacencyMatrix& a, double tol = 1e-12);

struct Enclosure {
  double lo;
  double hi;
};

/// [log lambda_lo, log lambda_hi].
Enclosure topological_entropy(const AdjacencyMatrix& a, double tol = 1e-12);

/// Returns c if lambda_A^k = c is an integer, else nullopt. Decided exactly:
/// integer candidates inside the rigorous enclosure of lambda_A^k are tested
/// as roots of the integer characteristic polynomial of A^k.
std::optional<mpz_class> is_integer_power_perron(const AdjacencyMatrix& a,
                                                 long k);

struct RootBound {
  long k_of_j;                 // gcd bound k(j)
  std::vector<long> feasible;  // divisors of k(j), increasing
};

/// Full shifts: n^{|j|/k} is Perron iff it is an integer. With
/// n = prod p^{e_p}, the feasible k are exactly the divisors of
/// gcd_p(|j| * e_p).
RootBound root_exponent_bound_fullshift(long n, long j);

enum class Feasibility { Yes, No, Unknown };

/// Numeric best-effort test of whether lambda_A^{j/k} is a Perron number.
/// Exact when lambda_A^j is an integer (in particular on 1x1 matrices);
/// Unknown otherwise for k >= 2, since excluding equal-modulus conjugates
/// would require algebraic-number factorization.
Feasibility perron_root_feasible(const AdjacencyMatrix& a, long j, long k,
                                 double tol = 1e-9);

/// Modulus of the largest non-Perron eigenvalue (numeric, Eigen).
double second_eigenvalue_modulus(const AdjacencyMatrix& a);

/// All eigenvalue moduli of A (numeric), descending.
std::vector<double> eigenvalue_moduli(const AdjacencyMatrix& a);

}  // namespace sftlab

#endif
