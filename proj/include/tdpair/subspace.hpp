#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tdpair/matrix.hpp"

namespace tdpair {

/// Subspace of F^n stored as the nonzero rows of a reduced row-echelon matrix.
/// Equal subspaces have identical bases, so == is exact set equality.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  /// Span of the rows of `rows`.
  static Subspace row_span(const Matrix& rows);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);

  Field field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }

  /// Canonical basis, one vector per row.
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> vectors() const { return basis_.row_list(); }
  /// ambient x dim matrix whose columns are the basis vectors.
  Matrix as_columns() const { return basis_.transpose(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

Subspace kernel(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const std::vector<Subspace>& parts, Field field, std::size_t ambient);
/// Zassenhaus intersection.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// {m v : v in w}
Subspace apply(const Matrix& m, const Subspace& w);

/// Ordered list of subspaces whose sum is direct and equals the ambient space.
class Decomposition {
 public:
  const std::vector<Subspace>& summands() const noexcept { return summands_; }
  std::size_t size() const noexcept { return summands_.size(); }
  const Subspace& operator[](std::size_t i) const { return summands_.at(i); }
  std::size_t ambient() const noexcept { return ambient_; }
  /// Rank of the concatenated bases; equals ambient() by construction.
  std::size_t certified_rank() const noexcept { return rank_; }

 private:
  friend Decomposition certify_direct_sum(const std::vector<Subspace>& parts);
  std::vector<Subspace> summands_;
  std::size_t ambient_ = 0;
  std::size_t rank_ = 0;
};

/// Index of the first summand that meets the sum of its predecessors, or
/// nullopt when the sum is direct.
std::optional<std::size_t> first_dependent_summand(const std::vector<Subspace>& parts);

/// Throws NotDirect (message names the first dependent index) or NotSpanning.
Decomposition certify_direct_sum(const std::vector<Subspace>& parts);

/// Projection onto each summand along the others.
std::vector<Matrix> projections_of(const Decomposition& dec);

}  // namespace tdpair
