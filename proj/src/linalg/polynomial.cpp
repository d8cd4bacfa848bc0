#include "tdpair/polynomial.hpp"

#include <sstream>

namespace tdpair {

Polynomial::Polynomial(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "polynomial coefficient outside " + field_.name());
  }
  trim();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x(Field field) { return Polynomial(field, {field.zero(), field.one()}); }

Polynomial Polynomial::linear(const Scalar& root) { return Polynomial(root.field(), {-root, root.field().one()}); }

Polynomial Polynomial::from_roots(Field field, const std::vector<Scalar>& roots) {
  Polynomial p = constant(field.one());
  for (const auto& r : roots) p *= linear(r);
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check_same_field(const Polynomial& other) const {
  if (field_ != other.field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

Scalar Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }

Scalar Polynomial::leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_field(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_field(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  check_same_field(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "polynomial scale");
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_ || a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (a.coeffs_[k] != b.coeffs_[k]) return false;
  }
  return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  check_same_field(divisor);
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Polynomial rem = *this;
  if (degree() < divisor.degree()) return {Polynomial(field_), rem};
  const std::size_t dq = coeffs_.size() - divisor.coeffs_.size();
  std::vector<Scalar> quot(dq + 1, field_.zero());
  const Scalar lead_inv = divisor.leading().inverse();
  for (std::size_t k = dq + 1; k-- > 0;) {
    const Scalar c = rem.coeff(k + divisor.coeffs_.size() - 1) * lead_inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) rem.coeffs_[k + j] -= c * divisor.coeffs_[j];
  }
  rem.trim();
  return {Polynomial(field_, std::move(quot)), rem};
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_);
  std::vector<Scalar> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * field_.from_int(static_cast<long long>(k)));
  return Polynomial(field_, std::move(out));
}

Scalar Polynomial::eval(const Scalar& at) const {
  if (at.field() != field_) throw Error(ErrorCode::FieldMismatch, "polynomial eval");
  Scalar acc = field_.zero();
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * at + coeffs_[k];
  return acc;
}

Matrix Polynomial::eval(const Matrix& at) const {
  require_square(at, "polynomial eval");
  require_field(at, field_, "polynomial eval");
  const std::size_t n = at.rows();
  Matrix acc(field_, n, n);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * at;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeffs_[k];
  }
  return acc;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << coeffs_[k].str() << ')';
    if (k >= 1) os << "*x";
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial powmod(const Polynomial& base, const mpz_class& exponent, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field().one()).divmod(modulus).second;
  Polynomial b = base.divmod(modulus).second;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result).divmod(modulus).second;
    if (mpz_tstbit(exponent.get_mpz_t(), i) != 0) result = (result * b).divmod(modulus).second;
  }
  return result;
}

Matrix matrix_poly_eval(const Polynomial& p, const Matrix& m) { return p.eval(m); }

}  // namespace tdpair
