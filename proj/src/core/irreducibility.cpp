#include <random>

#include "tdpair/linear_system.hpp"
#include "tdpair/td_system.hpp"

namespace tdpair {

Subspace invariant_closure(const std::vector<Matrix>& generators, const std::vector<Vector>& seeds) {
  if (generators.empty()) throw Error(ErrorCode::Usage, "closure needs at least one matrix");
  const Field f = generators.front().field();
  const std::size_t n = generators.front().rows();
  Subspace w = Subspace::span(f, n, seeds);
  std::vector<Vector> frontier = w.vectors();
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& v : frontier) {
      for (const auto& g : generators) {
        Vector gv = g * v;
        if (!w.contains(gv)) {
          w = subspace_sum(w, Subspace::span(f, n, {gv}));
          next.push_back(std::move(gv));
        }
      }
    }
    frontier = std::move(next);
  }
  return w;
}

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

std::size_t generated_algebra_dim(const std::vector<Matrix>& generators) {
  const Field f = generators.front().field();
  const std::size_t n = generators.front().rows();
  // Span of all words in the generators, grown by left multiplication.
  std::vector<Matrix> frontier{Matrix::identity(f, n)};
  Subspace span = Subspace::span(f, n * n, {flatten(frontier.front())});
  while (!frontier.empty() && span.dim() < n * n) {
    std::vector<Matrix> next;
    for (const auto& w : frontier) {
      for (const auto& g : generators) {
        Matrix gw = g * w;
        Vector flat = flatten(gw);
        if (!span.contains(flat)) {
          span = subspace_sum(span, Subspace::span(f, n * n, {flat}));
          next.push_back(std::move(gw));
        }
      }
    }
    frontier = std::move(next);
  }
  return span.dim();
}

IrreducibilityResult irreducibility_check(const TDPair& pair, std::uint64_t seed, std::size_t random_probes) {
  pair.check_well_formed();
  return irreducibility_check(pair, eigen_decompose(pair.A), eigen_decompose(pair.A_star), seed, random_probes);
}

IrreducibilityResult irreducibility_check(const TDPair& pair, const EigenDecomposition& ea, const EigenDecomposition& es,
                                          std::uint64_t seed, std::size_t random_probes) {
  const Field f = pair.field();
  const std::size_t n = pair.dim();
  const std::vector<Matrix> gens{pair.A, pair.A_star};

  // A nonzero invariant subspace contains an eigenvector of A* (resp. A). When
  // those eigenspaces are lines, that eigenvector is a multiple of a basis
  // vector of one of them, so probing those vectors decides the question.
  auto all_lines = [](const EigenDecomposition& e) {
    if (!e.diagonalizable) return false;
    for (const auto& p : e.pairs)
      if (p.space.dim() != 1) return false;
    return true;
  };
  auto probe = [&](const Vector& v) -> std::optional<Subspace> {
    if (is_zero(v)) return std::nullopt;
    Subspace c = invariant_closure(gens, {v});
    if (c.dim() < n) return c;
    return std::nullopt;
  };
  for (const auto* e : {&es, &ea}) {
    for (const auto& p : e->pairs)
      for (const auto& v : p.space.vectors())
        if (auto w = probe(v)) return {Irreducibility::Reducible, std::move(*w), "probe closure"};
    if (all_lines(*e)) {
      return {Irreducibility::Irreducible, std::nullopt,
              e == &es ? "probe closure, A* eigenspaces are lines" : "probe closure, A eigenspaces are lines"};
    }
  }

  std::vector<Vector> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(unit_vector(f, n, i));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coeff(-50, 50);
  for (std::size_t k = 0; k < random_probes; ++k) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(coeff(rng)));
    probes.push_back(std::move(v));
  }
  for (const auto& v : probes)
    if (auto w = probe(v)) return {Irreducibility::Reducible, std::move(*w), "probe closure"};

  if (generated_algebra_dim(gens) == n * n) {
    return {Irreducibility::Irreducible, std::nullopt, "A and A* generate the full matrix algebra"};
  }
  return {Irreducibility::Inconclusive, std::nullopt, "probe closure"};
}

}  // namespace tdpair
