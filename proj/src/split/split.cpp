#include "tdpair/split.hpp"

#include <algorithm>
#include <string>

namespace tdpair {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }
std::string idx(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

/// Runs checks into a private list, forwards them to `log`, and throws `code`
/// with the first failure.
class Verifier {
 public:
  Verifier(ErrorCode code, CheckList* log) : code_(code), log_(log) {}
  CheckList& list() { return list_; }
  void finish() {
    if (log_) log_->append(list_.results());
    for (const auto& r : list_.results())
      if (r.status == CheckStatus::Fail) throw Error(code_, r.id + " " + r.detail);
  }

 private:
  ErrorCode code_;
  CheckList* log_;
  CheckList list_;
};

Matrix shifted(const Matrix& m, const Scalar& c) { return m - Matrix::identity(m.field(), m.rows()) * c; }

Matrix combination(const std::vector<Matrix>& parts, const std::vector<Scalar>& coeffs) {
  Matrix out(parts.front().field(), parts.front().rows(), parts.front().cols());
  for (std::size_t h = 0; h < parts.size(); ++h) out += parts[h] * coeffs[h];
  return out;
}

}  // namespace

bool vanishes_on(const Matrix& m, const Subspace& w) {
  for (const auto& v : w.vectors())
    if (!is_zero(m * v)) return false;
  return true;
}

bool maps_into(const Matrix& m, const Subspace& w, const Subspace& target) {
  for (const auto& v : w.vectors())
    if (!target.contains(m * v)) return false;
  return true;
}

bool agree_on(const Matrix& m, const Matrix& n, const Subspace& w) { return vanishes_on(m - n, w); }

Subspace partial_sum(const std::vector<Subspace>& parts, long lo, long hi, Field field, std::size_t ambient) {
  std::vector<Subspace> chosen;
  for (long k = std::max(lo, 0L); k <= hi && k < static_cast<long>(parts.size()); ++k) chosen.push_back(parts[k]);
  return subspace_sum(chosen, field, ambient);
}

EvaluatedFamily::EvaluatedFamily(const Matrix& a, const std::vector<Scalar>& theta) {
  const std::size_t d = theta.size() - 1;
  const Field f = a.field();
  const Matrix id = Matrix::identity(f, a.rows());
  tau_.resize(d + 2);
  eta_.resize(d + 2);
  for (std::size_t i = 0; i <= d + 1; ++i) {
    tau_[i].push_back(id);
    eta_[i].push_back(id);
    for (std::size_t j = i + 1; j <= d + 1; ++j) {
      tau_[i].push_back(tau_[i].back() * shifted(a, theta[j - 1]));
      eta_[i].push_back(eta_[i].back() * shifted(a, theta[d - (j - 1)]));
    }
  }
}

const Matrix& EvaluatedFamily::tau(std::size_t i, std::size_t j) const {
  if (i >= tau_.size() || j < i || j - i >= tau_[i].size()) throw Error(ErrorCode::IndexRange, "tau" + idx(i, j));
  return tau_[i][j - i];
}

const Matrix& EvaluatedFamily::eta(std::size_t i, std::size_t j) const {
  if (i >= eta_.size() || j < i || j - i >= eta_[i].size()) throw Error(ErrorCode::IndexRange, "eta" + idx(i, j));
  return eta_[i][j - i];
}

Decomposition build_split(const TDSystem& s, SplitFlavor flavor, CheckList* log) {
  const std::size_t d = s.d;
  const Field f = s.field();
  const std::size_t n = s.dim();
  // The second split decomposition is the first one of the second inversion.
  std::vector<Subspace> eig = s.eigenspaces;
  std::vector<Scalar> theta = s.theta;
  if (flavor == SplitFlavor::Second) {
    std::reverse(eig.begin(), eig.end());
    std::reverse(theta.begin(), theta.end());
  }
  const std::string id = flavor == SplitFlavor::First ? "SPLIT-FIRST" : "SPLIT-SECOND";
  Verifier ver(ErrorCode::SplitTheoremViolated, log);
  CheckList& out = ver.list();
  out.touch(id);

  std::vector<Subspace> parts;
  for (std::size_t i = 0; i <= d; ++i) {
    const Subspace head_star = partial_sum(s.dual_eigenspaces, 0, long(i), f, n);
    const Subspace tail = partial_sum(eig, long(i), long(d), f, n);
    parts.push_back(subspace_intersection(head_star, tail));
  }
  Decomposition dec;
  try {
    dec = certify_direct_sum(parts);
  } catch (const Error& e) {
    out.expect(id, false, std::string("decomposition: ") + e.what());
    ver.finish();
  }

  const Matrix& a = s.A();
  const Matrix& as = s.A_star();
  const Subspace zero = Subspace::zero(f, n);
  for (std::size_t i = 0; i <= d; ++i) {
    // (A - theta_i) U_i in U_{i+1}, zero on U_d
    out.expect(id, maps_into(shifted(a, theta[i]), parts[i], i < d ? parts[i + 1] : zero), "A - theta_i does not raise at " + idx(i));
    // (A* - theta*_i) U_i in U_{i-1}, zero on U_0
    out.expect(id, maps_into(shifted(as, s.theta_star[i]), parts[i], i > 0 ? parts[i - 1] : zero),
               "A* - theta*_i does not lower at " + idx(i));
    // telescoping sums
    out.expect(id, partial_sum(parts, long(i), long(d), f, n) == partial_sum(eig, long(i), long(d), f, n),
               "tail sum differs at " + idx(i));
    out.expect(id, partial_sum(parts, 0, long(i), f, n) == partial_sum(s.dual_eigenspaces, 0, long(i), f, n),
               "head sum differs at " + idx(i));
  }
  ver.finish();
  return dec;
}

std::vector<Matrix> build_F(const Decomposition& dec) { return projections_of(dec); }

RaisingLowering build_R_L(const TDSystem& s, const Decomposition& U, const Decomposition& U_dd,
                          const std::vector<Matrix>& F, const std::vector<Matrix>& F_dd, CheckList* log) {
  const std::size_t d = s.d;
  const Field f = s.field();
  const std::size_t n = s.dim();
  std::vector<Scalar> theta_rev(s.theta.rbegin(), s.theta.rend());
  RaisingLowering out{s.A() - combination(F, s.theta), s.A_star() - combination(F, s.theta_star),
                      s.A() - combination(F_dd, theta_rev)};
  const Matrix& R = out.R;
  const Matrix& L = out.L;
  const Matrix& Rdd = out.R_dd;
  const Matrix zero_m(f, n, n);
  const Subspace zero = Subspace::zero(f, n);

  Verifier ver(ErrorCode::LadderViolated, log);
  CheckList& c = ver.list();
  const std::string on_u = "SPLIT-RAISE-ON-U", ladder = "SPLIT-LADDER", fr = "SPLIT-FR", rrddf = "SPLIT-RAISE-INTERTWINE";
  for (const auto& id : {on_u, ladder, fr, rrddf}) c.touch(id);
  for (std::size_t i = 0; i <= d; ++i) {
    c.expect(on_u, agree_on(R, shifted(s.A(), s.theta[i]), U[i]), "R at " + idx(i));
    c.expect(on_u, agree_on(L, shifted(s.A_star(), s.theta_star[i]), U[i]), "L at " + idx(i));
    c.expect(ladder, maps_into(R, U[i], i < d ? U[i + 1] : zero), "R U_" + idx(i));
    c.expect(ladder, maps_into(L, U[i], i > 0 ? U[i - 1] : zero), "L U_" + idx(i));
    c.expect(ladder, maps_into(Rdd, U_dd[i], i < d ? U_dd[i + 1] : zero), "R_dd U_dd_" + idx(i));
    const Matrix& f_next = i < d ? F[i + 1] : zero_m;
    const Matrix& f_prev = i > 0 ? F[i - 1] : zero_m;
    c.expect(fr, R * F[i] == f_next * R, "R F_i at " + idx(i));
    c.expect(fr, L * F[i] == f_prev * L, "L F_i at " + idx(i));
    if (i < d) c.expect(rrddf, Rdd * F_dd[i] * F[i] == F_dd[i + 1] * F[i + 1] * R, idx(i));
  }
  c.expect(fr, (F[0] * R).is_zero(), "F_0 R");
  c.expect(fr, (F[d] * L).is_zero(), "F_d L");
  ver.finish();
  return out;
}

std::vector<Subspace> build_K(const TDSystem& s, const Decomposition& U, const Decomposition& U_dd,
                              const EvaluatedFamily& ev, CheckList* log) {
  const std::size_t d = s.d;
  const Field f = s.field();
  const std::size_t n = s.dim();
  Verifier ver(ErrorCode::RouteMismatch, log);
  CheckList& c = ver.list();
  const std::string id = "SPLIT-K-ROUTES";
  c.touch(id);
  std::vector<Subspace> K;
  for (std::size_t i = 0; 2 * i <= d; ++i) {
    const Subspace by_def = subspace_intersection(partial_sum(s.dual_eigenspaces, 0, long(i), f, n),
                                                  partial_sum(s.eigenspaces, long(i), long(d - i), f, n));
    const Subspace by_split = subspace_intersection(U[i], U_dd[i]);
    const Subspace by_kernel = subspace_intersection(U[i], kernel(ev.tau(i, d - i + 1)));
    c.expect(id, by_def == by_split, "intersection of the splits differs at " + idx(i));
    c.expect(id, by_def == by_kernel, "kernel route differs at " + idx(i));
    K.push_back(by_def);
  }
  c.expect(id, K[0] == U[0] && K[0] == s.dual_eigenspaces[0], "K_0 != U_0 = E*_0 V");
  ver.finish();
  return K;
}

RefinementGrid refine(const TDSystem& s, const std::vector<Subspace>& K, const Decomposition& U,
                      const EvaluatedFamily& ev, CheckList* log) {
  const std::size_t d = s.d;
  const Field f = s.field();
  const std::size_t n = s.dim();
  Verifier ver(ErrorCode::RefinementNotDirect, log);
  CheckList& c = ver.list();
  const std::string id = "SPLIT-REFINEMENT", bij = "SPLIT-TAU-BIJECTION";
  c.touch(id);
  c.touch(bij);

  RefinementGrid grid;
  grid.d = d;
  for (std::size_t i = 0; 2 * i <= d; ++i) {
    grid.k_basis.push_back(K[i].vectors());
    std::vector<Subspace> row;
    for (std::size_t j = i; j <= d - i; ++j) {
      std::vector<Vector> images;
      for (const auto& v : grid.k_basis[i]) images.push_back(ev.tau(i, j) * v);
      Subspace cell = Subspace::span(f, n, images);
      c.expect(bij, cell.dim() == K[i].dim(), "dim tau_ij(A) K_i != dim K_i at " + idx(i, j));
      row.push_back(std::move(cell));
    }
    grid.cells.push_back(std::move(row));
  }
  // the cells of one K_i map onto each other bijectively
  for (std::size_t i = 0; 2 * i <= d; ++i)
    for (std::size_t j = i; j <= d - i; ++j)
      for (std::size_t k = j; k <= d - i; ++k) {
        c.expect(bij, apply(ev.tau(j, k), grid.cell(i, j)) == grid.cell(i, k), "tau_jk(A) at " + idx(i, j) + "->" + idx(k));
      }

  // U_j is the direct sum of tau_ij(A) K_i over i <= min(j, d-j)
  std::vector<Subspace> all;
  for (std::size_t j = 0; j <= d; ++j) {
    std::vector<Subspace> parts;
    for (std::size_t i = 0; i <= std::min(j, d - j); ++i) parts.push_back(grid.cell(i, j));
    const auto bad = first_dependent_summand(parts);
    c.expect(id, !bad.has_value(), "sum for U_" + idx(j) + " not direct at summand " + (bad ? idx(*bad) : ""));
    c.expect(id, subspace_sum(parts, f, n) == U[j], "sum differs from U_" + idx(j));
  }
  for (std::size_t i = 0; 2 * i <= d; ++i)
    for (std::size_t j = i; j <= d - i; ++j) all.push_back(grid.cell(i, j));
  try {
    certify_direct_sum(all);
  } catch (const Error& e) {
    c.expect(id, false, std::string("global refinement: ") + e.what());
  }
  ver.finish();
  return grid;
}

std::vector<MModule> m_module_decompose(const TDSystem& s, const RefinementGrid& grid, const EvaluatedFamily& ev,
                                        const PolyFamily& fam, CheckList* log) {
  const std::size_t d = s.d;
  const Field f = s.field();
  const std::size_t n = s.dim();
  Verifier ver(ErrorCode::MinpolyMismatch, log);
  CheckList& c = ver.list();
  const std::string mp = "SPLIT-MINPOLY", mods = "SPLIT-M-MODULES";
  c.touch(mp);
  c.touch(mods);
  std::vector<MModule> out;
  std::vector<Subspace> spans;
  for (std::size_t i = 0; 2 * i <= d; ++i) {
    if (grid.k_basis[i].empty()) continue;
    MModule m;
    m.index = i;
    std::vector<Subspace> parts;
    for (std::size_t j = i; j <= d - i; ++j) {
      std::vector<Vector> row;
      for (const auto& v : grid.k_basis[i]) row.push_back(ev.tau(i, j) * v);
      m.grid.push_back(std::move(row));
      parts.push_back(grid.cell(i, j));
    }
    c.expect(mods, !first_dependent_summand(parts).has_value(), "M K_" + idx(i) + " not direct");
    m.span = subspace_sum(parts, f, n);
    // M K_i is the A-closure of K_i
    c.expect(mods, m.span == invariant_closure({s.A()}, grid.k_basis[i]), "M K_" + idx(i) + " is not the A-closure of K_i");

    // tau_{i,d-i+1} annihilates; every tau_ij with j <= d-i (the monic divisors
    // in the chain) does not
    const Polynomial& minpoly = fam.tau(i, d - i + 1);
    c.expect(mp, vanishes_on(matrix_poly_eval(minpoly, s.A()), m.span), "tau_{i,d-i+1}(A) M K_i != 0 at " + idx(i));
    for (std::size_t j = i; j <= d - i; ++j) {
      c.expect(mp, !vanishes_on(ev.tau(i, j), m.span), "tau_ij(A) vanishes on M K_i at " + idx(i, j));
    }
    // for each basis vector v, M v has basis v, tau_{i,i+1}(A) v, ..., tau_{i,d-i}(A) v
    for (std::size_t k = 0; k < grid.k_basis[i].size(); ++k) {
      std::vector<Vector> chain;
      for (const auto& row : m.grid) chain.push_back(row[k]);
      const Subspace sp = Subspace::span(f, n, chain);
      c.expect(mods, sp.dim() == chain.size(), "chain not independent at " + idx(i, k));
      c.expect(mods, sp == invariant_closure({s.A()}, {grid.k_basis[i][k]}), "chain does not span M v at " + idx(i, k));
    }
    spans.push_back(m.span);
    out.push_back(std::move(m));
  }
  try {
    certify_direct_sum(spans);
  } catch (const Error& e) {
    c.expect(mods, false, std::string("V = sum M K_i: ") + e.what());
  }
  ver.finish();
  return out;
}

SplitApparatus build_split_apparatus(const TDSystem& s, const EvaluatedFamily& ev, const PolyFamily& fam) {
  CheckList log;
  SplitApparatus sa;
  sa.U = build_split(s, SplitFlavor::First, &log);
  sa.U_dd = build_split(s, SplitFlavor::Second, &log);
  sa.F = build_F(sa.U);
  sa.F_dd = build_F(sa.U_dd);
  RaisingLowering rl = build_R_L(s, sa.U, sa.U_dd, sa.F, sa.F_dd, &log);
  sa.R = std::move(rl.R);
  sa.L = std::move(rl.L);
  sa.R_dd = std::move(rl.R_dd);
  sa.K = build_K(s, sa.U, sa.U_dd, ev, &log);
  sa.refinement = refine(s, sa.K, sa.U, ev, &log);
  sa.modules = m_module_decompose(s, sa.refinement, ev, fam, &log);
  sa.build_checks = log.results();
  return sa;
}

std::vector<CheckResult> verify_split_suite(const TDSystem& s, const SplitApparatus& sa, const EvaluatedFamily& ev,
                                            const Shape& shape) {
  const std::size_t d = s.d;
  const Field f = s.field();
  const std::size_t n = s.dim();
  const Matrix id_m = Matrix::identity(f, n);
  const Matrix zero_m(f, n, n);
  CheckList c;
  c.append(sa.build_checks);

  const auto& U = sa.U.summands();
  const auto& Udd = sa.U_dd.summands();
  const auto& F = sa.F;
  const auto& Fdd = sa.F_dd;

  const std::string partial = "SPLIT-PARTIAL-SUMS";
  c.touch(partial);
  for (std::size_t i = 0; i <= d; ++i) {
    c.expect(partial, partial_sum(U, 0, long(i), f, n) == partial_sum(Udd, 0, long(i), f, n), idx(i));
  }

  const std::string resolve = "SPLIT-F-RESOLVE";
  c.touch(resolve);
  for (const auto* fam : {&F, &Fdd}) {
    Matrix sum = zero_m;
    for (std::size_t i = 0; i <= d; ++i) {
      sum += (*fam)[i];
      for (std::size_t j = 0; j <= d; ++j) {
        c.expect(resolve, (*fam)[i] * (*fam)[j] == (i == j ? (*fam)[i] : zero_m), idx(i, j));
      }
    }
    c.expect(resolve, sum == id_m, "sum of projections != I");
  }
  for (std::size_t i = 0; i <= d; ++i) {
    c.expect(resolve, image(F[i]) == U[i] && image(Fdd[i]) == Udd[i], "projection image at " + idx(i));
  }

  const std::string ortho = "SPLIT-PROJ-ORTHO", sandwich = "SPLIT-PROJ-SANDWICH", inv = "SPLIT-F-INVERSE";
  c.touch(ortho);
  c.touch(sandwich);
  c.touch(inv);
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = i + 1; j <= d; ++j) {
      c.expect(ortho, (F[j] * Fdd[i]).is_zero() && (Fdd[j] * F[i]).is_zero(), idx(i, j));
    }
    c.expect(sandwich, F[i] * Fdd[i] * F[i] == F[i], "F_i F_dd_i F_i at " + idx(i));
    c.expect(sandwich, Fdd[i] * F[i] * Fdd[i] == Fdd[i], "F_dd_i F_i F_dd_i at " + idx(i));
    // restrictions are mutually inverse bijections
    c.expect(inv, apply(Fdd[i], U[i]) == Udd[i] && apply(F[i], Udd[i]) == U[i], "not onto at " + idx(i));
    c.expect(inv, agree_on(F[i] * Fdd[i], id_m, U[i]) && agree_on(Fdd[i] * F[i], id_m, Udd[i]), "not inverse at " + idx(i));
  }

  const std::string power = "SPLIT-R-POWER", tau_maps = "SPLIT-TAU-MAPS";
  c.touch(power);
  c.touch(tau_maps);
  for (std::size_t i = 0; i <= d; ++i) {
    Matrix rp = id_m, rddp = id_m;
    for (std::size_t j = i; j <= d + 1; ++j) {
      c.expect(power, agree_on(rp, ev.tau(i, j), U[i]), "R^{j-i} at " + idx(i, j));
      c.expect(power, agree_on(rddp, ev.eta(i, j), Udd[i]), "R_dd^{j-i} at " + idx(i, j));
      const Subspace target = j <= d ? U[j] : Subspace::zero(f, n);
      c.expect(tau_maps, maps_into(ev.tau(i, j), U[i], target), idx(i, j));
      rp = sa.R * rp;
      rddp = sa.R_dd * rddp;
    }
  }

  const std::string pattern = "SPLIT-RANK-PATTERN", injective = "SPLIT-INJECTIVE";
  c.touch(pattern);
  c.touch(injective);
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = i; j <= d; ++j) {
      const Subspace img = apply(ev.tau(i, j), U[i]);
      const bool inj = img.dim() == U[i].dim();
      const bool surj = img == U[j];
      if (i + j <= d) c.expect(pattern, inj, "not injective at " + idx(i, j));
      if (i + j >= d) c.expect(pattern, surj, "not surjective at " + idx(i, j));
    }
  for (std::size_t i = 0; 2 * i < d; ++i) {
    c.expect(injective, apply(s.A() - id_m * s.theta[i], U[i]).dim() == U[i].dim(), idx(i));
  }

  const std::string ladders = "SPLIT-POWER-LADDERS";
  c.touch(ladders);
  for (std::size_t i = 0; i <= d; ++i) {
    Matrix ak = id_m, ask = id_m;
    for (std::size_t k = 0; k <= d; ++k) {
      if (k <= d - i) c.expect(ladders, maps_into(ak, U[i], partial_sum(U, long(i), long(i + k), f, n)), "A^k at " + idx(i, k));
      if (k <= i) c.expect(ladders, maps_into(ask, U[i], partial_sum(U, long(i - k), long(i), f, n)), "A*^k at " + idx(i, k));
      ak = s.A() * ak;
      ask = s.A_star() * ask;
    }
  }

  const std::string shape_id = "SHAPE";
  c.touch(shape_id);
  for (std::size_t i = 0; i <= d; ++i) {
    const std::size_t rho = shape.rho[i];
    c.expect(shape_id, rho == s.eigenspaces[i].dim() && rho == s.dual_eigenspaces[i].dim() && rho == U[i].dim() &&
                           rho == Udd[i].dim(),
             "dimensions differ at " + idx(i));
    c.expect(shape_id, rho == shape.rho[d - i], "rho_i != rho_{d-i} at " + idx(i));
    if (2 * i < d) c.expect(shape_id, rho <= shape.rho[i + 1], "not unimodal at " + idx(i));
  }

  const std::string kdim = "SPLIT-K-DIMENSION", ksplit = "SPLIT-K-SPLITTING";
  c.touch(kdim);
  c.touch(ksplit);
  c.expect(kdim, sa.K[0].dim() == shape.rho[0], "dim K_0 != rho_0");
  for (std::size_t i = 1; 2 * i <= d; ++i) {
    c.expect(kdim, sa.K[i].dim() == shape.rho[i] - shape.rho[i - 1], idx(i));
    const Subspace r_prev = apply(sa.R, U[i - 1]);
    const Subspace a_prev = apply(s.A() - id_m * s.theta[i - 1], U[i - 1]);
    for (const Subspace* other : {&r_prev, &a_prev}) {
      c.expect(ksplit, subspace_intersection(sa.K[i], *other).is_zero() && subspace_sum(sa.K[i], *other) == U[i],
               idx(i));
    }
  }
  return c.results();
}

}  // namespace tdpair
