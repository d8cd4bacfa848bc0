#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdpair/eigen.hpp"
#include "tdpair/subspace.hpp"

namespace tdpair {

/// Ordered pair of square matrices over one field.
struct TDPair {
  Matrix A;
  Matrix A_star;

  Field field() const { return A.field(); }
  std::size_t dim() const { return A.rows(); }
  /// Throws DimensionMismatch / FieldMismatch unless both are square, same size, same field.
  void check_well_formed() const;
};

/// A TD pair together with standard orderings of both idempotent families.
struct TDSystem {
  TDPair pair;
  std::vector<Matrix> E;
  std::vector<Matrix> E_star;
  std::vector<Scalar> theta;
  std::vector<Scalar> theta_star;
  /// E_i V and E*_i V
  std::vector<Subspace> eigenspaces;
  std::vector<Subspace> dual_eigenspaces;
  std::size_t d = 0;

  Field field() const { return pair.field(); }
  std::size_t dim() const { return pair.dim(); }
  const Matrix& A() const { return pair.A; }
  const Matrix& A_star() const { return pair.A_star; }
};

enum class BaseCase { Generic, Beta2, BetaMinus2OddD, BetaMinus2EvenD, Beta0Char2D3, SmallD };

std::string to_string(BaseCase c);

struct BaseInfo {
  Scalar beta;
  BaseCase kase = BaseCase::Generic;
  std::uint64_t characteristic = 0;
};

struct Shape {
  std::vector<std::size_t> rho;
};

/// An ordering lists eigenspace indices (into an eigen decomposition) in order.
using Ordering = std::vector<std::size_t>;

enum class Irreducibility { Irreducible, Reducible, Inconclusive };

struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::Inconclusive;
  /// Proper nonzero subspace invariant under A and A*, when reducible.
  std::optional<Subspace> witness;
  /// How the verdict was reached (for reports).
  std::string method;
};

/// Error carrying an invariant subspace.
class ReducibleError : public Error {
 public:
  ReducibleError(const std::string& message, Subspace witness)
      : Error(ErrorCode::Reducible, message), witness_(std::move(witness)) {}
  const Subspace& witness() const noexcept { return witness_; }

 private:
  Subspace witness_;
};

struct ValidationOptions {
  /// Seed for random irreducibility probes.
  std::uint64_t seed = 0x5eed;
  std::size_t random_probes = 4;
  /// Base used when d <= 2. Defaults to 2, or 1 in characteristic 2.
  std::optional<Scalar> small_d_beta;
};

/// All TD systems on a TD pair: (E, E*) orderings (fwd, fwd), (rev, fwd),
/// (fwd, rev), (rev, rev). The second is the second inversion of the first.
std::vector<TDSystem> validate_td_pair(const TDPair& pair, const ValidationOptions& options = {});

/// Edge {i, j} iff E_i * other * E_j != 0, for the eigenspace projections of a
/// diagonalizable matrix. Returned as an adjacency matrix.
std::vector<std::vector<bool>> adjacency_graph(const std::vector<Matrix>& projections, const Matrix& other);

/// Orderings along which every edge joins neighbours. For a connected graph
/// that is a path this is the path and its reversal.
std::vector<Ordering> standard_orderings(const EigenDecomposition& eigs, const Matrix& other);
std::vector<Ordering> path_orderings(const std::vector<std::vector<bool>>& graph);

/// E_i = prod_{j != i} (m - theta_j I) / (theta_i - theta_j).
std::vector<Matrix> primitive_idempotents(const Matrix& m, const std::vector<Scalar>& ordered_eigenvalues);

TDSystem second_inversion(const TDSystem& s);

/// Base and case. `small_d_beta` is used for d <= 2.
BaseInfo compute_base(const TDSystem& s, const std::optional<Scalar>& small_d_beta = std::nullopt);
/// beta + 1 from one eigenvalue sequence (d >= 3); throws RecurrenceViolated(i).
Scalar recurrence_ratio(const std::vector<Scalar>& theta, const char* side);

/// rho_i = dim E_i V; checks rho_i = dim E*_i V and rho_i = rho_{d-i}.
Shape shape_of(const TDSystem& s);

IrreducibilityResult irreducibility_check(const TDPair& pair, std::uint64_t seed, std::size_t random_probes = 4);
/// Same, reusing eigen decompositions of A and A*.
IrreducibilityResult irreducibility_check(const TDPair& pair, const EigenDecomposition& ea, const EigenDecomposition& es,
                                          std::uint64_t seed, std::size_t random_probes = 4);

/// Smallest subspace containing the vectors and invariant under every matrix.
Subspace invariant_closure(const std::vector<Matrix>& generators, const std::vector<Vector>& seeds);

/// Dimension of the unital algebra generated by the matrices.
std::size_t generated_algebra_dim(const std::vector<Matrix>& generators);

}  // namespace tdpair
