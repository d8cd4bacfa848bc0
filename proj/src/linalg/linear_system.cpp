#include "tdpair/linear_system.hpp"

#include <algorithm>

namespace tdpair {

AffineSolver::AffineSolver(Field field, std::size_t unknowns) : field_(field), n_(unknowns) {}

void AffineSolver::add_equation(const Vector& coeffs, const Scalar& rhs) {
  if (coeffs.size() != n_) throw Error(ErrorCode::DimensionMismatch, "equation length differs from unknown count");
  Vector e = coeffs;
  e.push_back(rhs);
  for (const auto& row : rows_) {
    if (e[row.pivot].is_zero()) continue;
    const Scalar c = e[row.pivot];
    for (std::size_t j = row.pivot; j <= n_; ++j) {
      if (!row.coeffs[j].is_zero()) e[j] -= c * row.coeffs[j];
    }
  }
  std::size_t pivot = 0;
  while (pivot < n_ && e[pivot].is_zero()) ++pivot;
  if (pivot == n_) {
    if (!e[n_].is_zero()) consistent_ = false;
    return;
  }
  const Scalar inv = e[pivot].inverse();
  for (std::size_t j = pivot; j <= n_; ++j) e[j] *= inv;
  for (auto& row : rows_) {
    if (row.coeffs[pivot].is_zero()) continue;
    const Scalar c = row.coeffs[pivot];
    for (std::size_t j = pivot; j <= n_; ++j) {
      if (!e[j].is_zero()) row.coeffs[j] -= c * e[j];
    }
  }
  const auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                    [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, Row{pivot, std::move(e)});
}

std::optional<Vector> AffineSolver::particular_solution() const {
  if (!consistent_) return std::nullopt;
  Vector x = zero_vector(field_, n_);
  for (const auto& row : rows_) x[row.pivot] = row.coeffs[n_];
  return x;
}

namespace {

std::vector<std::size_t> independent_rows(const Matrix& m) { return rref(m.transpose()).pivots; }

}  // namespace

void add_sandwich(AffineSolver& solver, const Matrix& p, const Matrix& q, const Matrix& m) {
  const std::size_t n = m.rows();
  if (solver.unknowns() != n * n || p.cols() != n || q.rows() != n) {
    throw Error(ErrorCode::DimensionMismatch, "sandwich shapes do not match the unknown matrix");
  }
  const Field f = solver.field();
  const Matrix target = p * m * q;
  const auto prow = independent_rows(p);
  const auto qcol = independent_rows(q.transpose());
  for (auto a : prow) {
    for (auto b : qcol) {
      // (P X Q)(a, b) = sum_{k,l} P(a,k) X(k,l) Q(l,b)
      Vector coeffs = zero_vector(f, n * n);
      for (std::size_t k = 0; k < n; ++k) {
        if (p(a, k).is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (!q(l, b).is_zero()) coeffs[k * n + l] = p(a, k) * q(l, b);
        }
      }
      solver.add_equation(coeffs, target(a, b));
    }
  }
}

void add_commutator(AffineSolver& solver, const Matrix& y, const Matrix& rhs) {
  const std::size_t n = y.rows();
  if (solver.unknowns() != n * n) throw Error(ErrorCode::DimensionMismatch, "commutator shapes");
  const Field f = solver.field();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Vector coeffs = zero_vector(f, n * n);
      for (std::size_t l = 0; l < n; ++l) coeffs[a * n + l] += y(l, b);
      for (std::size_t k = 0; k < n; ++k) coeffs[k * n + b] -= y(a, k);
      solver.add_equation(coeffs, rhs(a, b));
    }
  }
}

Matrix unknown_matrix(const Vector& solution, Field field, std::size_t n) {
  if (solution.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "solution length");
  Matrix out(field, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) out(k, l) = solution[k * n + l];
  }
  return out;
}

}  // namespace tdpair
