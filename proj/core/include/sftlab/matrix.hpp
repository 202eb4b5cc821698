#ifndef SFTLAB_MATRIX_HPP
#define SFTLAB_MATRIX_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "sftlab/errors.hpp"

namespace sftlab {

/// Exact nonnegative-integer square matrix. Immutable after construction;
/// construction rejects degenerate matrices (all-zero row or column).
class AdjacencyMatrix {
public:
  AdjacencyMatrix(int size, std::vector<mpz_class> entries);

  static AdjacencyMatrix from_rows(
      const std::vector<std::vector<long>>& rows);
  static AdjacencyMatrix full_shift(long n);   // 1x1 matrix [[n]]
  static AdjacencyMatrix golden_mean();        // [[1,1],[1,0]]

  int size() const { return size_; }
  const mpz_class& at(int i, int j) const { return entries_[i * size_ + j]; }
  const std::vector<mpz_class>& entries() const { return entries_; }

  mpz_class trace() const;
  mpz_class min_entry() const;
  mpz_class max_entry() const;
  mpz_class min_row_sum() const;
  mpz_class max_row_sum() const;
  mpz_class determinant() const;  // via charpoly constant term

  bool operator==(const AdjacencyMatrix& o) const {
    return size_ == o.size_ && entries_ == o.entries_;
  }

private:
  int size_;
  std::vector<mpz_class> entries_;
};

AdjacencyMatrix matrix_multiply(const AdjacencyMatrix& a,
                                const AdjacencyMatrix& b);

/// Exact k-th power; (A^k)_{ij} counts length-k paths i -> j.
AdjacencyMatrix matrix_power(const AdjacencyMatrix& a, long k);

struct Primitivity {
  bool primitive = false;
  std::optional<long> exponent;  // smallest K with A^K > 0, when primitive
};

/// Searches for the least K with A^K strictly positive, up to the Wielandt
/// bound r^2 - 2r + 2 (sharp), using boolean matrix powers.
Primitivity is_primitive(const AdjacencyMatrix& a);

void require_primitive(const AdjacencyMatrix& a);

/// p_n(sigma_A): exact count of points of period n. With brute_force set the
/// count comes from enumerating cyclic edge words and is cross-checked
/// against trace(A^n).
mpz_class periodic_points(const AdjacencyMatrix& a, long n,
                          bool brute_force = false);

/// Characteristic polynomial det(xI - A) over the integers, coefficients in
/// ascending degree order (constant term first), leading coefficient 1.
/// Faddeev-LeVerrier; all divisions are exact.
std::vector<mpz_class> characteristic_polynomial(const AdjacencyMatrix& a);

mpz_class poly_eval(const std::vector<mpz_class>& coeffs, const mpz_class& x);

}  // namespace sftlab

#endif
