#include <algorithm>
#include <string>

#include "tdpair/scalars.hpp"

namespace tdpair {

namespace {

mpz_class factorial(std::size_t n) {
  mpz_class out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= static_cast<unsigned long>(k);
  return out;
}

void require_characteristic_above(const Field& f, std::size_t n) {
  if (f.characteristic() != 0 && f.characteristic() <= n) {
    throw Error(ErrorCode::CharTooSmall,
                "characteristic " + std::to_string(f.characteristic()) + " does not exceed " + std::to_string(n));
  }
}

Scalar factorial_ratio(const Field& f, std::vector<std::size_t> top, std::vector<std::size_t> bottom) {
  mpz_class num = 1, den = 1;
  for (auto n : top) num *= factorial(n);
  for (auto n : bottom) den *= factorial(n);
  return f.from_mpz(num) / f.from_mpz(den);
}

}  // namespace

Scalar bracket_by_window(std::size_t r, std::size_t s, std::size_t t, const std::vector<Scalar>& theta) {
  const std::size_t w = r + s + t;
  const Field f = theta.front().field();
  if (w + 1 > theta.size()) throw Error(ErrorCode::IndexRange, "bracket window exceeds the eigenvalue sequence");
  if (r == 0 || s == 0 || t == 0) return f.one();
  const Scalar span = theta[0] - theta[w];
  std::vector<Scalar> vt{f.zero()};
  for (std::size_t h = 0; h < w; ++h) vt.push_back(vt.back() + (theta[h] - theta[w - h]) / span);
  Scalar out = f.one();
  for (std::size_t k = 0; k < r; ++k) {
    const Scalar& den = vt[w - k];
    if (den.is_zero()) {
      throw Error(ErrorCode::UnsupportedCase, "vartheta denominator vanishes for [" + std::to_string(r) + "," +
                                                  std::to_string(s) + "," + std::to_string(t) + "]");
    }
    out *= vt[r + s - k] / den;
  }
  return out;
}

Scalar bracket_by_qintegers(std::size_t r, std::size_t s, std::size_t t, const Scalar& beta) {
  std::vector<long> num, den;
  auto push_range = [](std::vector<long>& v, std::size_t n) {
    for (std::size_t k = 1; k <= n; ++k) v.push_back(static_cast<long>(k));
  };
  push_range(num, r + s);
  push_range(num, r + t);
  push_range(num, s + t);
  push_range(den, r);
  push_range(den, s);
  push_range(den, t);
  push_range(den, r + s + t);
  return qint_product_ratio(beta, num, den);
}

Scalar bracket(std::size_t r, std::size_t s, std::size_t t, const std::vector<Scalar>& theta, const BaseInfo& base) {
  const std::size_t d = theta.size() - 1;
  const Field f = theta.front().field();
  if (r + s + t > d) {
    throw Error(ErrorCode::IndexRange, "bracket [" + std::to_string(r) + "," + std::to_string(s) + "," +
                                           std::to_string(t) + "] exceeds d = " + std::to_string(d));
  }
  if (r == 0 || s == 0 || t == 0) return f.one();
  switch (formula_case(base, d)) {
    case BaseCase::Beta2:
      require_characteristic_above(f, r + s + t);
      return factorial_ratio(f, {r + s, r + t, s + t}, {r, s, t, r + s + t});
    case BaseCase::BetaMinus2OddD:
    case BaseCase::BetaMinus2EvenD:
      if (r % 2 == 1 && s % 2 == 1 && t % 2 == 1) return f.zero();
      require_characteristic_above(f, (r + s + t) / 2);
      return factorial_ratio(f, {(r + s) / 2, (r + t) / 2, (s + t) / 2}, {r / 2, s / 2, t / 2, (r + s + t) / 2});
    case BaseCase::Beta0Char2D3:
      return f.zero();  // only [1,1,1] has no zero index when d = 3
    case BaseCase::Generic:
    case BaseCase::SmallD:
      break;
  }
  return bracket_by_window(r, s, t, theta);
}

BracketTable::BracketTable(const std::vector<Scalar>& theta, const BaseInfo& base) : d_(theta.size() - 1) {
  for (std::size_t r = 0; r <= d_; ++r)
    for (std::size_t s = 0; r + s <= d_; ++s)
      for (std::size_t t = 0; r + s + t <= d_; ++t) table_.emplace(std::make_tuple(r, s, t), bracket(r, s, t, theta, base));
}

const Scalar& BracketTable::operator()(std::size_t r, std::size_t s, std::size_t t) const {
  const auto it = table_.find(std::make_tuple(r, s, t));
  if (it == table_.end()) {
    throw Error(ErrorCode::IndexRange, "bracket [" + std::to_string(r) + "," + std::to_string(s) + "," +
                                           std::to_string(t) + "] exceeds d = " + std::to_string(d_));
  }
  return it->second;
}

namespace {

void require_window(const PolyFamily& f, std::size_t i, std::size_t j) {
  if (2 * i > f.d() || j < i || j > f.d() - i) {
    throw Error(ErrorCode::IndexRange, "expansion index (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
}

}  // namespace

std::vector<Scalar> tau_to_eta(const PolyFamily& f, const BracketTable& br, std::size_t i, std::size_t j) {
  require_window(f, i, j);
  const std::size_t d = f.d();
  std::vector<Scalar> out;
  for (std::size_t h = 0; h <= j - i; ++h) out.push_back(br(h, j - i - h, d - i - j) * f.tau(i, i + h).eval(f.theta()[d - i]));
  return out;
}

std::vector<Scalar> eta_to_tau(const PolyFamily& f, const BracketTable& br, std::size_t i, std::size_t j) {
  require_window(f, i, j);
  const std::size_t d = f.d();
  std::vector<Scalar> out;
  for (std::size_t h = 0; h <= j - i; ++h) out.push_back(br(h, j - i - h, d - i - j) * f.eta(i, i + h).eval(f.theta()[i]));
  return out;
}

}  // namespace tdpair
