#include "tdpair/eigen.hpp"

#include <algorithm>
#include <utility>

namespace tdpair {

Polynomial characteristic_polynomial(const Matrix& m) {
  require_square(m, "characteristic polynomial");
  const Field f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;

  // Similarity transform to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Scalar inv = h(j + 1, j).inverse();
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j).is_zero()) continue;
      const Scalar u = h(r, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= u * h(j + 1, c);
      for (std::size_t c = 0; c < n; ++c) h(c, j + 1) += u * h(c, r);
    }
  }

  // p_k = charpoly of the leading k x k block.
  std::vector<Polynomial> p;
  p.push_back(Polynomial::constant(f.one()));
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = p[k - 1] * Polynomial::linear(h(k - 1, k - 1));
    Scalar t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t.is_zero()) break;
      next -= p[k - i - 1] * (t * h(k - i - 1, k - 1));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

namespace {

int sign(const mpq_class& q) { return sgn(q); }

class SturmChain {
 public:
  explicit SturmChain(const Polynomial& g) {
    chain_.push_back(g);
    chain_.push_back(g.derivative());
    while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
      Polynomial r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(r * (-g.field().one()));
    }
  }

  int variations(const mpz_class& at) const {
    const Field f = chain_.front().field();
    const Scalar x = f.from_mpz(at);
    int changes = 0;
    int last = 0;
    for (const auto& s : chain_) {
      const int sg = sign(s.eval(x).rational_value());
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  }

 private:
  std::vector<Polynomial> chain_;
};

void isolate_integer_roots(const Polynomial& g, const SturmChain& chain, const mpz_class& lo, const mpz_class& hi,
                           int count, std::vector<mpz_class>& out) {
  // count = number of distinct real roots of g in (lo, hi]
  if (count == 0) return;
  if (hi - lo == 1) {
    if (g.eval(g.field().from_mpz(hi)).is_zero()) out.push_back(hi);
    return;
  }
  mpz_class mid = lo + (hi - lo) / 2;
  const int left = chain.variations(lo) - chain.variations(mid);
  isolate_integer_roots(g, chain, lo, mid, left, out);
  isolate_integer_roots(g, chain, mid, hi, count - left, out);
}

std::vector<Scalar> rational_roots(const Polynomial& p) {
  const Field f = p.field();
  const Polynomial sqfree = p.divmod(gcd(p, p.derivative())).first.monic();
  const auto n = static_cast<std::size_t>(sqfree.degree());
  if (n == 0) return {};

  mpz_class lcm = 1;
  for (const auto& c : sqfree.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational_value().get_den_mpz_t());
  // g(y) = L^n sqfree(y / L) is monic with integer coefficients; its rational
  // roots are integers y and the roots of sqfree are y / L.
  std::vector<Scalar> gc;
  mpz_class scale = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    gc.push_back(sqfree.coeff(k) * f.from_mpz(scale));
    scale *= lcm;
  }
  std::reverse(gc.begin(), gc.end());
  const Polynomial g(f, gc);

  mpz_class bound = 0;
  for (const auto& c : g.coeffs()) {
    mpz_class a = abs(c.rational_value().get_num());
    if (a > bound) bound = a;
  }
  bound += 1;

  const SturmChain chain(g);
  const mpz_class lo = -bound;
  std::vector<mpz_class> ys;
  isolate_integer_roots(g, chain, lo, bound, chain.variations(lo) - chain.variations(bound), ys);

  std::vector<Scalar> out;
  for (const auto& y : ys) out.push_back(f.from_mpq(mpq_class(y, lcm)));
  return out;
}

void split_linear_factors(const Polynomial& h, std::vector<Scalar>& out) {
  // h is monic, squarefree, and a product of linear factors over GF(p), p odd.
  const Field f = h.field();
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    out.push_back(-h.coeff(0));
    return;
  }
  const mpz_class half = (mpz_class(std::to_string(f.modulus())) - 1) / 2;
  for (long long a = 0;; ++a) {
    const Polynomial probe = Polynomial(f, {f.from_int(a), f.one()});
    Polynomial w = powmod(probe, half, h) - Polynomial::constant(f.one());
    Polynomial g = gcd(w, h);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      split_linear_factors(g, out);
      split_linear_factors(h.divmod(g).first.monic(), out);
      return;
    }
  }
}

std::vector<Scalar> prime_field_roots(const Polynomial& p) {
  const Field f = p.field();
  std::vector<Scalar> out;
  if (f.modulus() <= 65536) {
    for (std::uint64_t r = 0; r < f.modulus(); ++r) {
      const Scalar x = f.from_int(static_cast<long long>(r));
      if (p.eval(x).is_zero()) out.push_back(x);
    }
    return out;
  }
  const Polynomial monic = p.monic();
  const Polynomial x = Polynomial::x(f);
  const Polynomial frob = powmod(x, mpz_class(std::to_string(f.modulus())), monic) - x;
  split_linear_factors(gcd(frob, monic), out);
  return out;
}

}  // namespace

std::vector<Scalar> roots_in_field(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::DivisionByZero, "roots of the zero polynomial");
  std::vector<Scalar> roots = p.field().is_rational() ? rational_roots(p) : prime_field_roots(p);
  std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
  return roots;
}

EigenDecomposition eigen_decompose(const Matrix& m) {
  require_square(m, "eigen decomposition");
  const Field f = m.field();
  const std::size_t n = m.rows();
  EigenDecomposition e;
  e.charpoly = characteristic_polynomial(m);
  std::size_t algebraic = 0;
  std::size_t geometric = 0;
  for (const auto& r : roots_in_field(e.charpoly)) {
    Eigenpair pair{r, kernel(m - Matrix::identity(f, n) * r), 0};
    Polynomial rest = e.charpoly;
    const Polynomial factor = Polynomial::linear(r);
    while (true) {
      auto [q, rem] = rest.divmod(factor);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++pair.algebraic_multiplicity;
    }
    algebraic += pair.algebraic_multiplicity;
    geometric += pair.space.dim();
    e.pairs.push_back(std::move(pair));
  }
  e.split = algebraic == n;
  e.diagonalizable = geometric == n;
  return e;
}

const EigenDecomposition& require_split(const EigenDecomposition& e, const char* what) {
  if (!e.split) {
    throw Error(ErrorCode::NotSplit, std::string(what) + ": characteristic polynomial " + e.charpoly.str() +
                                         " has roots outside " + e.charpoly.field().name());
  }
  return e;
}

}  // namespace tdpair
