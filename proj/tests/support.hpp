#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "tdpair/matrix.hpp"
#include "tdpair/subspace.hpp"

namespace tdpair::testing {

inline const Field QQ = Field::rational();

inline Scalar q(long long n, long long d = 1) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  mpq_class v(static_cast<long>(n), static_cast<long>(d));
  v.canonicalize();
  return QQ.from_mpq(v);
}

inline Matrix mat(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (long long x : r) v.push_back(f.from_int(x));
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(f, out);
}

inline Vector vec(Field f, std::initializer_list<long long> xs) {
  Vector v;
  for (long long x : xs) v.push_back(f.from_int(x));
  return v;
}

/// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

  Scalar scalar(Field f, long long span = 5) {
    if (f.is_rational() && integer(0, 3) == 0) {
      mpq_class v(static_cast<long>(integer(-span, span)), static_cast<long>(integer(1, 4)));
      v.canonicalize();
      return f.from_mpq(v);
    }
    return f.from_int(integer(-span, span));
  }

  Matrix matrix(Field f, std::size_t rows, std::size_t cols, long long span = 5) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(f, span);
    return m;
  }

  /// rows x cols matrix of rank at most r (product of random factors).
  Matrix low_rank(Field f, std::size_t rows, std::size_t cols, std::size_t r) {
    return matrix(f, rows, r) * matrix(f, r, cols);
  }

  Subspace subspace(Field f, std::size_t ambient, std::size_t max_gens) {
    const auto k = static_cast<std::size_t>(integer(0, static_cast<long long>(max_gens)));
    if (k == 0) return Subspace::zero(f, ambient);
    const auto r = static_cast<std::size_t>(integer(1, static_cast<long long>(k)));
    return Subspace::row_span(low_rank(f, k, ambient, r));
  }

  Matrix invertible(Field f, std::size_t n) {
    while (true) {
      Matrix m = matrix(f, n, n, 3);
      if (m.rank() == n) return m;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tdpair::testing
