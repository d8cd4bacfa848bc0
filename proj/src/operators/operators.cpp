#include "tdpair/operators.hpp"

#include <string>

#include "tdpair/linear_system.hpp"

namespace tdpair {

const char* to_string(Route r) {
  switch (r) {
    case Route::Definitional:
      return "DEFINITIONAL";
    case Route::Characterization:
      return "CHARACTERIZATION";
    case Route::Expansion:
      return "EXPANSION";
  }
  return "?";
}

namespace {

/// Sum of the idempotents whose index satisfies `keep`.
template <typename Pred>
Matrix idempotent_sum(const std::vector<Matrix>& e, Pred keep) {
  Matrix out(e.front().field(), e.front().rows(), e.front().cols());
  for (std::size_t j = 0; j < e.size(); ++j)
    if (keep(j)) out += e[j];
  return out;
}

Characterized finish(const AffineSolver& solver, Field f, std::size_t n) {
  Characterized out;
  out.consistent = solver.consistent();
  out.nullity = solver.nullity();
  if (out.consistent && out.nullity == 0) out.value = unknown_matrix(*solver.particular_solution(), f, n);
  return out;
}

Matrix require_unique(const Characterized& c, const char* what) {
  if (!c.consistent) throw Error(ErrorCode::NoSolution, what);
  if (c.nullity != 0) throw Error(ErrorCode::NonUnique, std::string(what) + ": solution space of dimension " + std::to_string(c.nullity));
  return *c.value;
}

}  // namespace

std::pair<Matrix, Matrix> build_delta(const SplitApparatus& sa) {
  const Field f = sa.F.front().field();
  const std::size_t n = sa.F.front().rows();
  Matrix delta(f, n, n), inv(f, n, n);
  for (std::size_t h = 0; h < sa.F.size(); ++h) {
    delta += sa.F_dd[h] * sa.F[h];
    inv += sa.F[h] * sa.F_dd[h];
  }
  if (delta * inv != Matrix::identity(f, n)) throw Error(ErrorCode::IdentityFailed, "Delta * Delta_inv != I");
  return {delta, inv};
}

Matrix build_psi_constructive(const TDSystem& s, const SplitApparatus& sa, const EvaluatedFamily& ev,
                              const VarthetaSeq& vt) {
  const std::size_t d = s.d;
  const Field f = s.field();
  const std::size_t n = s.dim();
  std::vector<Vector> basis, images;
  const Vector zero(n, f.zero());
  for (std::size_t i = 0; 2 * i <= d; ++i)
    for (const auto& v : sa.refinement.k_basis[i])
      for (std::size_t j = i; j <= d - i; ++j) {
        basis.push_back(ev.tau(i, j) * v);
        if (j == i) {
          images.push_back(zero);
        } else {
          Vector w = ev.tau(i, j - 1) * v;
          const Scalar c = vt.values[j] - vt.values[i];
          for (auto& x : w) x *= c;
          images.push_back(std::move(w));
        }
      }
  const Matrix b = Matrix::from_columns(f, basis, n);
  return Matrix::from_columns(f, images, n) * b.inverse();
}

Characterized solve_psi_by_eigenspaces(const TDSystem& s, const Matrix& delta, bool loosened) {
  const std::size_t d = s.d;
  const Field f = s.field();
  const std::size_t n = s.dim();
  const Matrix zero(f, n, n);
  const Matrix target = (delta - Matrix::identity(f, n)) * (s.theta[0] - s.theta[d]).inverse();
  AffineSolver solver(f, n * n);
  for (std::size_t i = 0; i <= d; ++i) {
    const Matrix far = idempotent_sum(s.E, [&](std::size_t j) { return j + 1 < i || j > i + 1; });
    if (!far.is_zero()) add_sandwich(solver, far, s.E[i], zero);
    // allowed range E*_0 .. E*_{i-2}, or E*_{i-1} when loosened
    const std::size_t first_forbidden = loosened ? i : (i == 0 ? 0 : i - 1);
    const Matrix above = idempotent_sum(s.E_star, [&](std::size_t j) { return j >= first_forbidden; });
    add_sandwich(solver, above, s.E_star[i], target);
  }
  return finish(solver, f, n);
}

Characterized solve_psi_by_commutator(const TDSystem& s, const SplitApparatus& sa) {
  const std::size_t d = s.d;
  const Field f = s.field();
  const std::size_t n = s.dim();
  const Scalar span_inv = (s.theta[0] - s.theta[d]).inverse();
  Matrix rhs(f, n, n);
  for (std::size_t h = 0; h <= d; ++h) rhs += sa.F[h] * ((s.theta[h] - s.theta[d - h]) * span_inv);
  AffineSolver solver(f, n * n);
  add_commutator(solver, sa.R, rhs);
  const Matrix id = Matrix::identity(f, n);
  const Matrix zero(f, n, n);
  for (const auto& k : sa.K)
    if (!k.is_zero()) add_sandwich(solver, id, k.as_columns(), zero);
  return finish(solver, f, n);
}

Characterized solve_delta_by_eigenspaces(const TDSystem& s) {
  const std::size_t d = s.d;
  const Field f = s.field();
  const std::size_t n = s.dim();
  const Matrix id = Matrix::identity(f, n);
  const Matrix zero(f, n, n);
  AffineSolver solver(f, n * n);
  for (std::size_t i = 0; i <= d; ++i) {
    const Matrix above = idempotent_sum(s.E_star, [&](std::size_t j) { return j >= i; });
    add_sandwich(solver, above, s.E_star[i], id);
    // E_k Delta' E_i = 0 whenever k + i > d
    const Matrix beyond = idempotent_sum(s.E, [&](std::size_t k) { return k + i > d; });
    if (!beyond.is_zero()) add_sandwich(solver, beyond, s.E[i], zero);
  }
  return finish(solver, f, n);
}

Matrix build_psi_by_characterization(const TDSystem& s, const Matrix& delta) {
  return require_unique(solve_psi_by_eigenspaces(s, delta), "Psi from eigenspace bounds");
}

Matrix build_psi_second_characterization(const TDSystem& s, const SplitApparatus& sa) {
  return require_unique(solve_psi_by_commutator(s, sa), "Psi from the commutator with R");
}

std::pair<Matrix, Matrix> expand_delta_in_psi(const std::vector<Scalar>& theta, const VarthetaSeq& vt,
                                              const Matrix& psi) {
  const std::size_t d = theta.size() - 1;
  const Field f = psi.field();
  const std::size_t n = psi.rows();
  for (std::size_t k = 1; k <= d; ++k) {
    if (vt.values[k].is_zero()) {
      throw Error(ErrorCode::HypothesisFailed, "vartheta_" + std::to_string(k) + " = 0");
    }
  }
  const PolyFamily fam(theta);
  Matrix delta = Matrix::identity(f, n), inv = delta, power = delta;
  Scalar denom = f.one();
  for (std::size_t k = 1; k <= d; ++k) {
    power = power * psi;
    denom *= vt.values[k];
    delta += power * (fam.eta(0, k).eval(theta[0]) / denom);
    inv += power * (fam.tau(0, k).eval(theta[d]) / denom);
  }
  return {delta, inv};
}

OperatorPair build_operators(const TDSystem& s, const SplitApparatus& sa, const EvaluatedFamily& ev,
                             const VarthetaSeq& vt) {
  auto [delta, inv] = build_delta(sa);
  return {std::move(delta), std::move(inv), build_psi_constructive(s, sa, ev, vt)};
}

Matrix commutator_L_psi(const SplitApparatus& sa, const Matrix& psi) { return sa.L * psi - psi * sa.L; }

}  // namespace tdpair
