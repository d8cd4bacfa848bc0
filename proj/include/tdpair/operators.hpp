#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tdpair/checks.hpp"
#include "tdpair/scalars.hpp"
#include "tdpair/split.hpp"

namespace tdpair {

enum class Route { Definitional, Characterization, Expansion };
const char* to_string(Route r);

struct OperatorPair {
  Matrix Delta;
  Matrix Delta_inv;
  Matrix Psi;
  Route delta_route = Route::Definitional;
  Route psi_route = Route::Definitional;
};

/// Outcome of a characterization solve: the unique solution, or the rank data
/// when there is none.
struct Characterized {
  std::optional<Matrix> value;
  bool consistent = true;
  std::size_t nullity = 0;
};

/// Delta = sum F_dd_h F_h and its inverse sum F_h F_dd_h. Throws IdentityFailed
/// if the product is not I.
std::pair<Matrix, Matrix> build_delta(const SplitApparatus& sa);

/// Psi on the refinement basis: tau_ij(A) v -> (vartheta_j - vartheta_i) tau_{i,j-1}(A) v.
Matrix build_psi_constructive(const TDSystem& s, const SplitApparatus& sa, const EvaluatedFamily& ev,
                              const VarthetaSeq& vt);

/// Psi' with Psi' E_iV in E_{i-1}V + E_iV + E_{i+1}V and
/// (Psi' - (Delta - I)/(theta_0 - theta_d)) E*_iV in E*_0V + ... + E*_{i-2}V.
/// `loosened` relaxes the second bound to E*_{i-1}V.
Characterized solve_psi_by_eigenspaces(const TDSystem& s, const Matrix& delta, bool loosened = false);
/// Psi' with Psi'R - RPsi' = sum (theta_h - theta_{d-h})/(theta_0 - theta_d) F_h and Psi'K_i = 0.
Characterized solve_psi_by_commutator(const TDSystem& s, const SplitApparatus& sa);
/// Delta' with (Delta' - I)E*_iV in E*_0V + ... + E*_{i-1}V and
/// Delta'(E_iV + ... + E_dV) in E_0V + ... + E_{d-i}V.
Characterized solve_delta_by_eigenspaces(const TDSystem& s);

/// Throwing wrappers: NonUnique or NoSolution.
Matrix build_psi_by_characterization(const TDSystem& s, const Matrix& delta);
Matrix build_psi_second_characterization(const TDSystem& s, const SplitApparatus& sa);

/// Delta and Delta^{-1} as polynomials in Psi with coefficients
/// eta_{0k}(theta_0)/(vartheta_1...vartheta_k) and tau_{0k}(theta_d)/(vartheta_1...vartheta_k).
/// Throws HypothesisFailed naming the first vanishing vartheta_k.
std::pair<Matrix, Matrix> expand_delta_in_psi(const std::vector<Scalar>& theta, const VarthetaSeq& vt,
                                              const Matrix& psi);

/// Delta, Delta^{-1} and the constructive Psi.
OperatorPair build_operators(const TDSystem& s, const SplitApparatus& sa, const EvaluatedFamily& ev,
                             const VarthetaSeq& vt);

/// Identity catalog C1-C19 plus the route comparisons and the per-operator
/// spot checks. Failures are entries, nothing throws.
std::vector<CheckResult> verify_operator_identities(const TDSystem& s, const SplitApparatus& sa,
                                                    const EvaluatedFamily& ev, const VarthetaSeq& vt,
                                                    const OperatorPair& ops);

/// L Psi - Psi L. No identity is asserted about it.
Matrix commutator_L_psi(const SplitApparatus& sa, const Matrix& psi);

}  // namespace tdpair
