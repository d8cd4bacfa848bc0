#pragma once

#include <cstddef>
#include <vector>

#include "tdpair/polynomial.hpp"
#include "tdpair/subspace.hpp"

namespace tdpair {

/// Characteristic polynomial det(xI - m), via reduction to Hessenberg form.
Polynomial characteristic_polynomial(const Matrix& m);

/// Distinct roots of p lying in its field, in canonical order.
std::vector<Scalar> roots_in_field(const Polynomial& p);

struct Eigenpair {
  Scalar value;
  Subspace space;
  std::size_t algebraic_multiplicity = 0;
};

struct EigenDecomposition {
  Polynomial charpoly{Field::rational()};
  /// Eigenvalues in the field, canonical order.
  std::vector<Eigenpair> pairs;
  /// The characteristic polynomial is a product of linear factors.
  bool split = false;
  /// The eigenspaces span the ambient space.
  bool diagonalizable = false;
};

EigenDecomposition eigen_decompose(const Matrix& m);

/// Throws NotSplit unless the characteristic polynomial splits.
const EigenDecomposition& require_split(const EigenDecomposition& e, const char* what);

}  // namespace tdpair
