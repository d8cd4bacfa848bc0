#pragma once

#include <cstddef>
#include <vector>

#include "tdpair/checks.hpp"
#include "tdpair/scalars.hpp"
#include "tdpair/td_system.hpp"

namespace tdpair {

enum class SplitFlavor { First, Second };

/// tau_ij(A) and eta_ij(A) for 0 <= i <= j <= d+1, built by repeated
/// multiplication by (A - theta_k I).
class EvaluatedFamily {
 public:
  EvaluatedFamily(const Matrix& a, const std::vector<Scalar>& theta);
  const Matrix& tau(std::size_t i, std::size_t j) const;
  const Matrix& eta(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::vector<Matrix>> tau_;
  std::vector<std::vector<Matrix>> eta_;
};

/// Summands tau_ij(A) K_i for 0 <= i <= d/2, i <= j <= d-i, stored densely
/// (zero subspaces where K_i = 0).
struct RefinementGrid {
  std::size_t d = 0;
  /// cells[i][j - i]
  std::vector<std::vector<Subspace>> cells;
  /// Fixed basis of each K_i.
  std::vector<std::vector<Vector>> k_basis;

  const Subspace& cell(std::size_t i, std::size_t j) const { return cells.at(i).at(j - i); }
};

/// M K_i = K_i + tau_{i,i+1}(A) K_i + ... + tau_{i,d-i}(A) K_i.
struct MModule {
  std::size_t index = 0;
  Subspace span;
  /// grid[j - i][k] = tau_ij(A) applied to the k-th basis vector of K_i
  std::vector<std::vector<Vector>> grid;
};

struct RaisingLowering {
  Matrix R;
  Matrix L;
  Matrix R_dd;
};

struct SplitApparatus {
  Decomposition U;
  Decomposition U_dd;
  std::vector<Matrix> F;
  std::vector<Matrix> F_dd;
  Matrix R;
  Matrix L;
  Matrix R_dd;
  std::vector<Subspace> K;
  RefinementGrid refinement;
  std::vector<MModule> modules;
  /// Checks run while building; every entry passed or the build threw.
  std::vector<CheckResult> build_checks;
};

/// First: U_i = (E*_0V + ... + E*_iV) cap (E_iV + ... + E_dV).
/// Second: the same with E_0V + ... + E_{d-i}V as the second factor.
/// Certifies the decomposition and the ladder and telescoping statements;
/// throws SplitTheoremViolated.
Decomposition build_split(const TDSystem& s, SplitFlavor flavor, CheckList* log = nullptr);

/// Projections onto the summands.
std::vector<Matrix> build_F(const Decomposition& dec);

/// R = A - sum theta_h F_h, L = A* - sum theta*_h F_h, R_dd = A - sum theta_{d-h} F_dd_h,
/// with their ladder and intertwining properties; throws LadderViolated.
RaisingLowering build_R_L(const TDSystem& s, const Decomposition& U, const Decomposition& U_dd,
                          const std::vector<Matrix>& F, const std::vector<Matrix>& F_dd, CheckList* log = nullptr);

/// K_i for 0 <= i <= d/2, computed three ways (double intersection, U_i cap U_dd_i,
/// kernel of tau_{i,d-i+1}(A) on U_i); throws RouteMismatch.
std::vector<Subspace> build_K(const TDSystem& s, const Decomposition& U, const Decomposition& U_dd,
                              const EvaluatedFamily& ev, CheckList* log = nullptr);

/// Refinement of every U_j and of V; throws RefinementNotDirect.
RefinementGrid refine(const TDSystem& s, const std::vector<Subspace>& K, const Decomposition& U,
                      const EvaluatedFamily& ev, CheckList* log = nullptr);

/// One module per nonzero K_i; checks the minimal polynomial of A on each;
/// throws MinpolyMismatch.
std::vector<MModule> m_module_decompose(const TDSystem& s, const RefinementGrid& grid, const EvaluatedFamily& ev,
                                        const PolyFamily& fam, CheckList* log = nullptr);

SplitApparatus build_split_apparatus(const TDSystem& s, const EvaluatedFamily& ev, const PolyFamily& fam);

/// Build checks plus the remaining structural statements.
std::vector<CheckResult> verify_split_suite(const TDSystem& s, const SplitApparatus& sa, const EvaluatedFamily& ev,
                                            const Shape& shape);

/// m v = 0 for every v in w.
bool vanishes_on(const Matrix& m, const Subspace& w);
/// m w contained in target.
bool maps_into(const Matrix& m, const Subspace& w, const Subspace& target);
/// m and n agree on w.
bool agree_on(const Matrix& m, const Matrix& n, const Subspace& w);
/// Sum of the summands with indices in [lo, hi] (empty range gives 0).
Subspace partial_sum(const std::vector<Subspace>& parts, long lo, long hi, Field field, std::size_t ambient);

}  // namespace tdpair
