#include "tdpair/td_system.hpp"

#include <algorithm>
#include <functional>

namespace tdpair {

void TDPair::check_well_formed() const {
  require_square(A, "A");
  require_square(A_star, "A*");
  if (A.rows() != A_star.rows()) throw Error(ErrorCode::DimensionMismatch, "A and A* have different sizes");
  if (A.field() != A_star.field()) throw Error(ErrorCode::FieldMismatch, "A and A* live over different fields");
  if (A.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrices");
}

std::string to_string(BaseCase c) {
  switch (c) {
    case BaseCase::Generic: return "GENERIC";
    case BaseCase::Beta2: return "BETA_2";
    case BaseCase::BetaMinus2OddD: return "BETA_MINUS_2_ODD_D";
    case BaseCase::BetaMinus2EvenD: return "BETA_MINUS_2_EVEN_D";
    case BaseCase::Beta0Char2D3: return "BETA_0_CHAR2_D3";
    case BaseCase::SmallD: return "SMALL_D";
  }
  return "UNKNOWN";
}

std::vector<std::vector<bool>> adjacency_graph(const std::vector<Matrix>& projections, const Matrix& other) {
  const std::size_t k = projections.size();
  std::vector<std::vector<bool>> g(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    const Matrix left = projections[i] * other;
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && !(left * projections[j]).is_zero()) g[i][j] = true;
    }
  }
  // E_i B E_j != 0 need not be symmetric for a non-TD input; use the union.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g[i][j] = g[i][j] || g[j][i];
  return g;
}

namespace {

std::vector<std::vector<std::size_t>> components(const std::vector<std::vector<bool>>& g) {
  const std::size_t k = g.size();
  std::vector<int> comp(k, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size() - 1);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::size_t w = 0; w < k; ++w) {
        if (g[v][w] && comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

/// Traversal of a connected component that is a path, starting at its smaller endpoint.
std::optional<Ordering> walk_path(const std::vector<std::vector<bool>>& g, const std::vector<std::size_t>& comp) {
  if (comp.size() == 1) return Ordering{comp.front()};
  std::vector<std::size_t> ends;
  std::size_t edges = 0;
  for (auto v : comp) {
    std::size_t deg = 0;
    for (auto w : comp) deg += g[v][w] ? 1 : 0;
    if (deg > 2 || deg == 0) return std::nullopt;
    if (deg == 1) ends.push_back(v);
    edges += deg;
  }
  if (ends.size() != 2 || edges / 2 != comp.size() - 1) return std::nullopt;
  Ordering walk{ends.front()};
  std::size_t prev = ends.front();
  std::size_t cur = ends.front();
  while (walk.size() < comp.size()) {
    for (auto w : comp) {
      if (g[cur][w] && w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    }
    walk.push_back(cur);
  }
  return walk;
}

}  // namespace

std::vector<Ordering> path_orderings(const std::vector<std::vector<bool>>& graph) {
  const auto comps = components(graph);
  std::vector<Ordering> pieces;
  for (const auto& c : comps) {
    auto w = walk_path(graph, c);
    if (!w) return {};
    pieces.push_back(*w);
  }
  // Every arrangement of the pieces, each in either direction.
  std::vector<std::size_t> perm(pieces.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<Ordering> out;
  do {
    std::function<void(std::size_t, Ordering)> place = [&](std::size_t idx, Ordering acc) {
      if (idx == perm.size()) {
        out.push_back(std::move(acc));
        return;
      }
      const Ordering& piece = pieces[perm[idx]];
      Ordering fwd = acc;
      fwd.insert(fwd.end(), piece.begin(), piece.end());
      place(idx + 1, std::move(fwd));
      if (piece.size() > 1) {
        Ordering rev = std::move(acc);
        rev.insert(rev.end(), piece.rbegin(), piece.rend());
        place(idx + 1, std::move(rev));
      }
    };
    place(0, {});
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Matrix> eigen_projections(const EigenDecomposition& e) {
  std::vector<Subspace> spaces;
  for (const auto& p : e.pairs) spaces.push_back(p.space);
  return projections_of(certify_direct_sum(spaces));
}

}  // namespace

std::vector<Ordering> standard_orderings(const EigenDecomposition& eigs, const Matrix& other) {
  return path_orderings(adjacency_graph(eigen_projections(eigs), other));
}

std::vector<Matrix> primitive_idempotents(const Matrix& m, const std::vector<Scalar>& ordered_eigenvalues) {
  const Field f = m.field();
  const std::size_t n = m.rows();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < ordered_eigenvalues.size(); ++i) {
    Matrix e = Matrix::identity(f, n);
    for (std::size_t j = 0; j < ordered_eigenvalues.size(); ++j) {
      if (i == j) continue;
      const Scalar denom = ordered_eigenvalues[i] - ordered_eigenvalues[j];
      e = e * ((m - Matrix::identity(f, n) * ordered_eigenvalues[j]) * denom.inverse());
    }
    out.push_back(std::move(e));
  }
  return out;
}

TDSystem second_inversion(const TDSystem& s) {
  TDSystem out = s;
  std::reverse(out.E.begin(), out.E.end());
  std::reverse(out.theta.begin(), out.theta.end());
  std::reverse(out.eigenspaces.begin(), out.eigenspaces.end());
  return out;
}

Scalar recurrence_ratio(const std::vector<Scalar>& theta, const char* side) {
  const std::size_t d = theta.size() - 1;
  if (d < 3) throw Error(ErrorCode::Usage, "recurrence ratio needs d >= 3");
  std::optional<Scalar> common;
  for (std::size_t i = 2; i + 1 <= d; ++i) {
    const Scalar r = (theta[i - 2] - theta[i + 1]) / (theta[i - 1] - theta[i]);
    if (!common) {
      common = r;
    } else if (*common != r) {
      throw Error(ErrorCode::RecurrenceViolated,
                  std::string(side) + " sequence: ratio at i=" + std::to_string(i) + " is " + r.str() +
                      " but earlier ratios are " + common->str());
    }
  }
  return *common;
}

BaseInfo compute_base(const TDSystem& s, const std::optional<Scalar>& small_d_beta) {
  const Field f = s.field();
  BaseInfo info;
  info.characteristic = f.characteristic();
  const std::size_t d = s.d;
  if (d <= 2) {
    info.beta = small_d_beta ? *small_d_beta : (f.characteristic() == 2 ? f.one() : f.from_int(2));
    if (info.beta.field() != f) throw Error(ErrorCode::FieldMismatch, "configured base is over another field");
    if (info.beta.is_zero()) throw Error(ErrorCode::Usage, "the base must be nonzero");
    info.kase = BaseCase::SmallD;
    return info;
  }
  const Scalar r = recurrence_ratio(s.theta, "theta");
  const Scalar r_star = recurrence_ratio(s.theta_star, "theta*");
  if (r != r_star) {
    throw Error(ErrorCode::RecurrenceViolated,
                "eigenvalue ratio " + r.str() + " differs from dual eigenvalue ratio " + r_star.str());
  }
  info.beta = r - f.one();
  const std::uint64_t ch = f.characteristic();
  const Scalar two = f.from_int(2);
  if (ch == 2) {
    if (info.beta.is_zero()) {
      if (d != 3) {
        throw Error(ErrorCode::InconsistentBase,
                    "base 0 in characteristic 2 requires d = 3, got d = " + std::to_string(d));
      }
      info.kase = BaseCase::Beta0Char2D3;
    } else {
      info.kase = BaseCase::Generic;
    }
    return info;
  }
  if (info.beta == two) {
    if (ch != 0 && ch <= d) {
      throw Error(ErrorCode::InconsistentBase, "base 2 requires characteristic 0 or greater than d");
    }
    info.kase = BaseCase::Beta2;
  } else if (info.beta == -two) {
    if (ch != 0 && 2 * ch <= d) {
      throw Error(ErrorCode::InconsistentBase, "base -2 requires characteristic 0 or greater than d/2");
    }
    info.kase = d % 2 == 1 ? BaseCase::BetaMinus2OddD : BaseCase::BetaMinus2EvenD;
  } else {
    info.kase = BaseCase::Generic;
  }
  return info;
}

Shape shape_of(const TDSystem& s) {
  Shape shape;
  for (std::size_t i = 0; i <= s.d; ++i) {
    const std::size_t rho = s.eigenspaces[i].dim();
    if (s.dual_eigenspaces[i].dim() != rho) {
      throw Error(ErrorCode::IdentityFailed, "dim E_" + std::to_string(i) + "V differs from dim E*_" +
                                                 std::to_string(i) + "V");
    }
    shape.rho.push_back(rho);
  }
  for (std::size_t i = 0; i <= s.d; ++i) {
    if (shape.rho[i] != shape.rho[s.d - i]) {
      throw Error(ErrorCode::IdentityFailed, "shape is not symmetric at i=" + std::to_string(i));
    }
  }
  return shape;
}

namespace {

std::vector<std::size_t> canonical_traversal(const std::vector<std::vector<bool>>& g) {
  // Path traversal beginning at the endpoint with the smaller index.
  auto orders = path_orderings(g);
  return orders.front();
}

void check_witness(const TDPair& pair, const Subspace& w) {
  if (!w.contains(apply(pair.A, w)) || !w.contains(apply(pair.A_star, w))) {
    throw Error(ErrorCode::IdentityFailed, "reducibility witness is not invariant");
  }
}

Subspace component_sum(const EigenDecomposition& e, const std::vector<std::size_t>& comp) {
  std::vector<Subspace> parts;
  for (auto i : comp) parts.push_back(e.pairs[i].space);
  return subspace_sum(parts, e.pairs.front().space.field(), e.pairs.front().space.ambient());
}

}  // namespace

std::vector<TDSystem> validate_td_pair(const TDPair& pair, const ValidationOptions& options) {
  pair.check_well_formed();

  const EigenDecomposition ea = eigen_decompose(pair.A);
  const EigenDecomposition es = eigen_decompose(pair.A_star);
  require_split(ea, "A");
  require_split(es, "A*");
  if (!ea.diagonalizable) throw Error(ErrorCode::NotDiagonalizable, "A is not diagonalizable");
  if (!es.diagonalizable) throw Error(ErrorCode::NotDiagonalizable, "A* is not diagonalizable");
  if (ea.pairs.size() == 1 || es.pairs.size() == 1) {
    throw Error(ErrorCode::DiameterZero, std::string(ea.pairs.size() == 1 ? "A" : "A*") + " has a single eigenvalue");
  }

  const std::vector<Matrix> pa = eigen_projections(ea);
  const std::vector<Matrix> ps = eigen_projections(es);
  const auto ga = adjacency_graph(pa, pair.A_star);
  const auto gs = adjacency_graph(ps, pair.A);

  for (const auto& [g, e, side] : {std::tuple{&ga, &ea, "A"}, std::tuple{&gs, &es, "A*"}}) {
    const auto comps = components(*g);
    if (comps.size() > 1) {
      Subspace w = component_sum(*e, comps.front());
      check_witness(pair, w);
      throw ReducibleError(std::string("eigenspaces of ") + side + " split into " + std::to_string(comps.size()) +
                               " blocks that the other matrix does not connect",
                           std::move(w));
    }
    if (path_orderings(*g).empty()) {
      throw Error(ErrorCode::NoStandardOrdering, std::string("eigenspaces of ") + side + " admit no standard ordering");
    }
  }
  if (ea.pairs.size() != es.pairs.size()) {
    throw Error(ErrorCode::DiameterMismatch, "A has " + std::to_string(ea.pairs.size()) + " eigenspaces, A* has " +
                                                 std::to_string(es.pairs.size()));
  }

  const IrreducibilityResult irr = irreducibility_check(pair, ea, es, options.seed, options.random_probes);
  if (irr.verdict == Irreducibility::Reducible) {
    throw ReducibleError("invariant subspace found by " + irr.method, *irr.witness);
  }
  if (irr.verdict == Irreducibility::Inconclusive) {
    throw Error(ErrorCode::IrreducibilityInconclusive, "probe closures all span V but no exact criterion applies");
  }

  const Ordering oa = canonical_traversal(ga);
  const Ordering os = canonical_traversal(gs);
  const std::size_t d = oa.size() - 1;

  auto build = [&](const Ordering& ord_a, const Ordering& ord_s) {
    TDSystem s;
    s.pair = pair;
    s.d = d;
    for (auto i : ord_a) {
      s.theta.push_back(ea.pairs[i].value);
      s.eigenspaces.push_back(ea.pairs[i].space);
    }
    for (auto i : ord_s) {
      s.theta_star.push_back(es.pairs[i].value);
      s.dual_eigenspaces.push_back(es.pairs[i].space);
    }
    s.E = primitive_idempotents(pair.A, s.theta);
    s.E_star = primitive_idempotents(pair.A_star, s.theta_star);
    for (std::size_t k = 0; k <= d; ++k) {
      if (s.E[k] != pa[ord_a[k]] || s.E_star[k] != ps[ord_s[k]]) {
        throw Error(ErrorCode::RouteMismatch, "product formula and projection disagree for idempotent " +
                                                  std::to_string(k));
      }
    }
    return s;
  };

  const Ordering rs(os.rbegin(), os.rend());
  std::vector<TDSystem> out;
  out.push_back(build(oa, os));
  out.push_back(second_inversion(out.front()));
  out.push_back(build(oa, rs));
  out.push_back(second_inversion(out.back()));
  return out;
}

}  // namespace tdpair
