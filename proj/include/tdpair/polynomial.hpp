#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tdpair/matrix.hpp"

namespace tdpair {

/// Univariate polynomial, coefficients lowest degree first. The zero polynomial
/// has no coefficients; otherwise the last coefficient is nonzero.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(field) {}
  Polynomial(Field field, std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c);
  static Polynomial x(Field field);
  /// x - root
  static Polynomial linear(const Scalar& root);
  /// Product of (x - r) over the given roots.
  static Polynomial from_roots(Field field, const std::vector<Scalar>& roots);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  Scalar coeff(std::size_t k) const;
  Scalar leading() const;
  bool is_monic() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial derivative() const;

  Scalar eval(const Scalar& at) const;
  Matrix eval(const Matrix& at) const;

  std::string str() const;

 private:
  void trim();
  void check_same_field(const Polynomial& other) const;

  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// base^exponent mod modulus, exponent given as a GMP integer.
Polynomial powmod(const Polynomial& base, const mpz_class& exponent, const Polynomial& modulus);

/// Horner evaluation of p at a square matrix.
Matrix matrix_poly_eval(const Polynomial& p, const Matrix& m);

}  // namespace tdpair
