#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "tdpair/errors.hpp"

namespace tdpair {

class Scalar;

/// Ground field: either the rationals or GF(p) for a prime p.
///
/// A Field is a small value type (the modulus, 0 meaning Q). Every Scalar
/// records the field it lives in so that arithmetic across contexts is
/// rejected with ErrorCode::FieldMismatch instead of producing garbage.
class Field {
 public:
  static Field rational() { return Field(0); }
  /// Throws Usage if p is not a prime below 2^62.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  Scalar from_mpz(const mpz_class& value) const;
  /// `value` must have a positive denominator (GMP copies misbehave otherwise).
  Scalar from_mpq(const mpq_class& value) const;

  /// Parses "n" or "n/d" over Q and an integer residue over GF(p).
  Scalar parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(Field a, Field b) noexcept { return a.modulus_ == b.modulus_; }
  friend bool operator!=(Field a, Field b) noexcept { return !(a == b); }

 private:
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only to make outputs deterministic (numeric order over
  /// Q, residue order over GF(p)). It is not a field order.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  /// "n/d" or "n" over Q, the residue over GF(p).
  std::string str() const;

  const mpq_class& rational_value() const { return q_; }
  std::uint64_t residue() const { return r_; }

 private:
  friend class Field;
  void check_same_field(const Scalar& other) const;

  Field field_ = Field::rational();
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tdpair
