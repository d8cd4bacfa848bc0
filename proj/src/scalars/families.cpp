#include <string>

#include "tdpair/scalars.hpp"

namespace tdpair {

PolyFamily::PolyFamily(std::vector<Scalar> theta) : theta_(std::move(theta)), zero_(theta_.at(0).field()) {
  const std::size_t d = this->d();
  const Field f = field();
  tau_.resize(d + 2);
  eta_.resize(d + 2);
  for (std::size_t i = 0; i <= d + 1; ++i) {
    Polynomial t = Polynomial::constant(f.one());
    Polynomial e = t;
    tau_[i].push_back(t);
    eta_[i].push_back(e);
    for (std::size_t j = i + 1; j <= d + 1; ++j) {
      t *= Polynomial::linear(theta_[j - 1]);
      e *= Polynomial::linear(theta_[d - (j - 1)]);
      tau_[i].push_back(t);
      eta_[i].push_back(e);
    }
  }
}

const Polynomial& PolyFamily::lookup(const std::vector<std::vector<Polynomial>>& table, std::size_t i,
                                     std::size_t j) const {
  if (j + 1 == i) return zero_;
  if (i > d() + 1 || j > d() + 1 || j < i) {
    throw Error(ErrorCode::IndexRange, "polynomial index (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  return table[i][j - i];
}

const Polynomial& PolyFamily::tau(std::size_t i, std::size_t j) const { return lookup(tau_, i, j); }
const Polynomial& PolyFamily::eta(std::size_t i, std::size_t j) const { return lookup(eta_, i, j); }

namespace {

/// [n]/[1] for odd n and [n]/[2] for even n, where [n] = q^{n/2} - q^{-n/2}.
Scalar normalized_qint(const Scalar& beta, long n) {
  const Field f = beta.field();
  if (n < 0) return -normalized_qint(beta, -n);
  if (n % 2 == 0) {
    // e_0 = 0, e_1 = 1, e_{k+1} = beta e_k - e_{k-1}; [2k]/[2] = e_k
    Scalar prev = f.zero(), cur = f.one();
    if (n == 0) return prev;
    for (long k = 1; k < n / 2; ++k) {
      Scalar next = beta * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // f_{-1} = -1, f_1 = 1, f_{m+2} = beta f_m - f_{m-2}
  Scalar prev = -f.one(), cur = f.one();
  for (long m = 1; m < n; m += 2) {
    Scalar next = beta * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Scalar integer(Field f, long long v) { return f.from_int(v); }

}  // namespace

Scalar qint_ratio(const Scalar& beta, long a, long b) {
  if ((a - b) % 2 != 0) throw Error(ErrorCode::UnsupportedCase, "q-integer ratio with mixed parity");
  return normalized_qint(beta, a) / normalized_qint(beta, b);
}

Scalar qint_product_ratio(const Scalar& beta, const std::vector<long>& num, const std::vector<long>& den) {
  if (num.size() != den.size()) throw Error(ErrorCode::UnsupportedCase, "q-integer product with unequal lengths");
  const Field f = beta.field();
  Scalar top = f.one(), bottom = f.one();
  long even_excess = 0;
  for (long n : num) {
    top *= normalized_qint(beta, n);
    if (n % 2 == 0) ++even_excess;
  }
  for (long n : den) {
    bottom *= normalized_qint(beta, n);
    if (n % 2 == 0) --even_excess;
  }
  if (even_excess % 2 != 0) throw Error(ErrorCode::UnsupportedCase, "q-integer product needs a square root of beta+2");
  // ([2]/[1])^2 = beta + 2
  const Scalar square = beta + f.from_int(2);
  for (long k = 0; k < even_excess / 2; ++k) top *= square;
  for (long k = 0; k < -even_excess / 2; ++k) bottom *= square;
  return top / bottom;
}

BaseCase formula_case(const BaseInfo& base, std::size_t d) {
  if (base.kase != BaseCase::SmallD) return base.kase;
  const Field f = base.beta.field();
  if (f.characteristic() == 2) {
    return base.beta.is_zero() && d == 3 ? BaseCase::Beta0Char2D3 : BaseCase::Generic;
  }
  if (base.beta == f.from_int(2)) return BaseCase::Beta2;
  if (base.beta == f.from_int(-2)) return d % 2 == 1 ? BaseCase::BetaMinus2OddD : BaseCase::BetaMinus2EvenD;
  return BaseCase::Generic;
}

Scalar vartheta_closed_form(const BaseInfo& base, std::size_t d, std::size_t i) {
  const Field f = base.beta.field();
  const auto li = static_cast<long long>(i), ld = static_cast<long long>(d);
  switch (formula_case(base, d)) {
    case BaseCase::Beta2:
      return integer(f, li * (ld - li + 1)) / integer(f, ld);
    case BaseCase::BetaMinus2OddD:
    case BaseCase::Beta0Char2D3:
      return i % 2 == 1 ? f.one() : f.zero();
    case BaseCase::BetaMinus2EvenD:
      return i % 2 == 0 ? integer(f, li) / integer(f, ld) : integer(f, ld - li + 1) / integer(f, ld);
    case BaseCase::Generic:
    case BaseCase::SmallD:
      break;
  }
  return qint_product_ratio(base.beta, {static_cast<long>(li), static_cast<long>(ld - li + 1)}, {1, static_cast<long>(ld)});
}

VarthetaSeq vartheta(const std::vector<Scalar>& theta, const BaseInfo& base) {
  const std::size_t d = theta.size() - 1;
  const Field f = theta.front().field();
  const Scalar span = theta[0] - theta[d];
  VarthetaSeq out;
  Scalar acc = f.zero();
  out.values.push_back(acc);
  for (std::size_t h = 0; h <= d; ++h) {
    acc += (theta[h] - theta[d - h]) / span;
    out.values.push_back(acc);
  }
  for (std::size_t i = 0; i <= d + 1; ++i) {
    const Scalar expected = vartheta_closed_form(base, d, i);
    if (out.values[i] != expected) {
      throw Error(ErrorCode::ClosedFormMismatch, "case " + to_string(formula_case(base, d)) + ", index " +
                                                     std::to_string(i) + ": sum gives " + out.values[i].str() +
                                                     ", closed form " + expected.str());
    }
  }
  for (std::size_t i = 1; i <= d; ++i)
    if (out.values[i].is_zero()) out.all_nonzero = false;
  return out;
}

Scalar eigenvalue_ratio_formula(const BaseInfo& base, long i, long j, long r, long s) {
  const Field f = base.beta.field();
  // d only matters for the parity split, which this formula does not use.
  switch (formula_case(base, 3)) {
    case BaseCase::Beta2:
      return integer(f, r - s) / integer(f, i - j);
    case BaseCase::BetaMinus2OddD:
    case BaseCase::BetaMinus2EvenD: {
      const Scalar sign = (r + i) % 2 == 0 ? f.one() : -f.one();
      if ((i + j) % 2 == 0) return sign * integer(f, r - s) / integer(f, i - j);
      return sign;
    }
    case BaseCase::Beta0Char2D3:
      return r == s ? f.zero() : f.one();
    case BaseCase::Generic:
    case BaseCase::SmallD:
      break;
  }
  return qint_ratio(base.beta, r - s, i - j);
}

ScalarData scalar_data(const TDSystem& s, const BaseInfo& base) {
  return ScalarData{base, PolyFamily(s.theta), vartheta(s.theta, base), BracketTable(s.theta, base)};
}

}  // namespace tdpair
