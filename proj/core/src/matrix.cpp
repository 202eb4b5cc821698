#include "sftlab/matrix.hpp"

#include <vector>

namespace sftlab {

AdjacencyMatrix::AdjacencyMatrix(int size, std::vector<mpz_class> entries)
    : size_(size), entries_(std::move(entries)) {
  if (size_ <= 0) throw InvalidInput("matrix size must be positive");
  if (entries_.size() != static_cast<size_t>(size_) * size_)
    throw InvalidInput("entry count does not match size");
  for (const auto& e : entries_)
    if (e < 0) throw InvalidInput("matrix entries must be nonnegative");
  for (int i = 0; i < size_; ++i) {
    bool row = false, col = false;
    for (int j = 0; j < size_; ++j) {
      if (at(i, j) != 0) row = true;
      if (at(j, i) != 0) col = true;
    }
    if (!row) throw InvalidInput("all-zero row " + std::to_string(i));
    if (!col) throw InvalidInput("all-zero column " + std::to_string(i));
  }
}

AdjacencyMatrix AdjacencyMatrix::from_rows(
    const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  std::vector<mpz_class> e;
  e.reserve(static_cast<size_t>(r) * r);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != r)
      throw InvalidInput("matrix is not square");
    for (long v : row) e.emplace_back(v);
  }
  return AdjacencyMatrix(r, std::move(e));
}

AdjacencyMatrix AdjacencyMatrix::full_shift(long n) {
  if (n < 1) throw InvalidInput("full shift needs n >= 1");
  return AdjacencyMatrix(1, {mpz_class(n)});
}

AdjacencyMatrix AdjacencyMatrix::golden_mean() {
  return from_rows({{1, 1}, {1, 0}});
}

mpz_class AdjacencyMatrix::trace() const {
  mpz_class t = 0;
  for (int i = 0; i < size_; ++i) t += at(i, i);
  return t;
}

mpz_class AdjacencyMatrix::min_entry() const {
  mpz_class m = entries_[0];
  for (const auto& e : entries_)
    if (e < m) m = e;
  return m;
}

mpz_class AdjacencyMatrix::max_entry() const {
  mpz_class m = entries_[0];
  for (const auto& e : entries_)
    if (e > m) m = e;
  return m;
}

mpz_class AdjacencyMatrix::min_row_sum() const {
  mpz_class best;
  for (int i = 0; i < size_; ++i) {
    mpz_class s = 0;
    for (int j = 0; j < size_; ++j) s += at(i, j);
    if (i == 0 || s < best) best = s;
  }
  return best;
}

mpz_class AdjacencyMatrix::max_row_sum() const {
  mpz_class best;
  for (int i = 0; i < size_; ++i) {
    mpz_class s = 0;
    for (int j = 0; j < size_; ++j) s += at(i, j);
    if (i == 0 || s > best) best = s;
  }
  return best;
}

mpz_class AdjacencyMatrix::determinant() const {
  auto cp = characteristic_polynomial(*this);
  mpz_class det = cp[0];
  if (size_ % 2 != 0) det = -det;  // det(xI-A) at x=0 is (-1)^r det(A)
  return det;
}

AdjacencyMatrix matrix_multiply(const AdjacencyMatrix& a,
                                const AdjacencyMatrix& b) {
  if (a.size() != b.size()) throw InvalidInput("size mismatch in multiply");
  int r = a.size();
  std::vector<mpz_class> out(static_cast<size_t>(r) * r, mpz_class(0));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) out[i * r + j] += aik * b.at(k, j);
    }
  return AdjacencyMatrix(r, std::move(out));
}

AdjacencyMatrix matrix_power(const AdjacencyMatrix& a, long k) {
  if (k < 1) throw InvalidInput("matrix power needs k >= 1");
  // binary exponentiation
  AdjacencyMatrix base = a;
  std::optional<AdjacencyMatrix> acc;
  while (k > 0) {
    if (k & 1) acc = acc ? matrix_multiply(*acc, base) : base;
    k >>= 1;
    if (k > 0) base = matrix_multiply(base, base);
  }
  return *acc;
}

Primitivity is_primitive(const AdjacencyMatrix& a) {
  int r = a.size();
  long bound = static_cast<long>(r) * r - 2 * r + 2;  // Wielandt
  if (bound < 1) bound = 1;
  // boolean powers keep this cheap regardless of entry magnitude
  std::vector<char> cur(static_cast<size_t>(r) * r), base(cur);
  for (int i = 0; i < r * r; ++i)
    base[i] = cur[i] = (a.entries()[i] != 0) ? 1 : 0;
  auto all_pos = [&](const std::vector<char>& m) {
    for (char c : m)
      if (!c) return false;
    return true;
  };
  for (long K = 1; K <= bound; ++K) {
    if (K > 1) {
      std::vector<char> next(static_cast<size_t>(r) * r, 0);
      for (int i = 0; i < r; ++i)
        for (int k2 = 0; k2 < r; ++k2)
          if (cur[i * r + k2])
            for (int j = 0; j < r; ++j)
              if (base[k2 * r + j]) next[i * r + j] = 1;
      cur = std::move(next);
    }
    if (all_pos(cur)) return Primitivity{true, K};
  }
  return Primitivity{false, std::nullopt};
}

void require_primitive(const AdjacencyMatrix& a) {
  if (!is_primitive(a).primitive) throw NotPrimitive();
}

namespace {

// enumerates cyclic edge words of length n, one branch per parallel edge
mpz_class count_closed_walks(const AdjacencyMatrix& a, long n) {
  int r = a.size();
  mpz_class total = 0;
  std::vector<long> mult(static_cast<size_t>(r) * r);
  for (int i = 0; i < r * r; ++i) {
    if (!a.entries()[i].fits_slong_p())
      throw TooLarge("entries too large for brute-force enumeration");
    mult[i] = mpz_get_si(a.entries()[i].get_mpz_t());
  }
  int start = 0;
  auto walk = [&](auto&& self, int vertex, long remaining) -> void {
    if (remaining == 0) {
      if (vertex == start) ++total;
      return;
    }
    for (int j = 0; j < r; ++j)
      for (long e = 0; e < mult[vertex * r + j]; ++e)
        self(self, j, remaining - 1);
  };
  for (start = 0; start < r; ++start) walk(walk, start, n);
  return total;
}

}  // namespace

mpz_class periodic_points(const AdjacencyMatrix& a, long n, bool brute_force) {
  if (n < 1) throw InvalidInput("period must be >= 1");
  mpz_class tr = matrix_power(a, n).trace();
  if (brute_force) {
    // the enumeration visits exactly tr closed walks
    if (tr > 10000000)
      throw TooLarge("too many periodic points for brute-force enumeration");
    mpz_class bf = count_closed_walks(a, n);
    if (bf != tr)
      throw Error("oracle-mismatch",
                  "brute-force periodic count disagrees with trace");
  }
  return tr;
}

std::vector<mpz_class> characteristic_polynomial(const AdjacencyMatrix& a) {
  int r = a.size();
  // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_{k-1} ...)/k, divisions exact.
  std::vector<mpz_class> coeffs(static_cast<size_t>(r) + 1);
  coeffs[r] = 1;
  std::vector<mpz_class> M(a.entries());  // M_1 = A
  mpz_class c;
  for (int k = 1; k <= r; ++k) {
    mpz_class tr = 0;
    for (int i = 0; i < r; ++i) tr += M[i * r + i];
    c = -tr;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned>(k));
    coeffs[r - k] = c;
    if (k == r) break;
    // M_{k+1} = A (M_k + c_k I)
    for (int i = 0; i < r; ++i) M[i * r + i] += c;
    std::vector<mpz_class> next(static_cast<size_t>(r) * r, mpz_class(0));
    for (int i = 0; i < r; ++i)
      for (int k2 = 0; k2 < r; ++k2) {
        const mpz_class& aik = a.at(i, k2);
        if (aik == 0) continue;
        for (int j = 0; j < r; ++j) next[i * r + j] += aik * M[k2 * r + j];
      }
    M = std::move(next);
  }
  return coeffs;
}

mpz_class poly_eval(const std::vector<mpz_class>& coeffs, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace sftlab
