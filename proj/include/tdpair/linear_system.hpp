#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tdpair/matrix.hpp"

namespace tdpair {

/// Incremental solver for an affine system  sum_k c_k x_k = b  over a field.
/// Equations are folded into a reduced echelon basis as they arrive, so the
/// rank, the consistency and the solution-space dimension are always current.
class AffineSolver {
 public:
  AffineSolver(Field field, std::size_t unknowns);

  Field field() const noexcept { return field_; }
  std::size_t unknowns() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool consistent() const noexcept { return consistent_; }
  /// Dimension of the solution space (meaningful only when consistent).
  std::size_t nullity() const noexcept { return n_ - rows_.size(); }

  void add_equation(const Vector& coeffs, const Scalar& rhs);

  /// Some solution (free variables set to zero), or nullopt when inconsistent.
  std::optional<Vector> particular_solution() const;

 private:
  struct Row {
    std::size_t pivot;
    Vector coeffs;  // length n_ + 1, last entry is the right-hand side
  };

  Field field_;
  std::size_t n_;
  bool consistent_ = true;
  std::vector<Row> rows_;
};

/// Unknown n x n matrix X, stored row-major in the solver: X(k, l) is unknown k*n + l.
/// Adds the equations  P (X - M) Q = 0  with P, Q first cut down to independent
/// rows / columns, which leaves the solution set unchanged.
void add_sandwich(AffineSolver& solver, const Matrix& p, const Matrix& q, const Matrix& m);
/// Adds the n^2 equations  X*Y - Y*X = rhs.
void add_commutator(AffineSolver& solver, const Matrix& y, const Matrix& rhs);
/// Reads a solution vector back as an n x n matrix.
Matrix unknown_matrix(const Vector& solution, Field field, std::size_t n);

}  // namespace tdpair
