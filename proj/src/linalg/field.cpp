#include "tdpair/field.hpp"

#include <cctype>
#include <ostream>

namespace tdpair {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::Singular: return "SINGULAR";
    case ErrorCode::NotDirect: return "NOT_DIRECT";
    case ErrorCode::NotSpanning: return "NOT_SPANNING";
    case ErrorCode::NotSplit: return "NOT_SPLIT";
    case ErrorCode::NotDiagonalizable: return "NOT_DIAGONALIZABLE";
    case ErrorCode::NoStandardOrdering: return "NO_STANDARD_ORDERING";
    case ErrorCode::Reducible: return "REDUCIBLE";
    case ErrorCode::IrreducibilityInconclusive: return "IRREDUCIBILITY_INCONCLUSIVE";
    case ErrorCode::DiameterZero: return "DIAMETER_ZERO";
    case ErrorCode::DiameterMismatch: return "DIAMETER_MISMATCH";
    case ErrorCode::RecurrenceViolated: return "RECURRENCE_VIOLATED";
    case ErrorCode::InconsistentBase: return "INCONSISTENT_BASE";
    case ErrorCode::PresetInvalid: return "PRESET_INVALID";
    case ErrorCode::SplitTheoremViolated: return "SPLIT_THEOREM_VIOLATED";
    case ErrorCode::LadderViolated: return "LADDER_VIOLATED";
    case ErrorCode::RouteMismatch: return "ROUTE_MISMATCH";
    case ErrorCode::RefinementNotDirect: return "REFINEMENT_NOT_DIRECT";
    case ErrorCode::MinpolyMismatch: return "MINPOLY_MISMATCH";
    case ErrorCode::ClosedFormMismatch: return "CLOSED_FORM_MISMATCH";
    case ErrorCode::UnsupportedCase: return "UNSUPPORTED_CASE";
    case ErrorCode::CharTooSmall: return "CHAR_TOO_SMALL";
    case ErrorCode::IdentityFailed: return "IDENTITY_FAILED";
    case ErrorCode::NonUnique: return "NON_UNIQUE";
    case ErrorCode::NoSolution: return "NO_SOLUTION";
    case ErrorCode::HypothesisFailed: return "HYPOTHESIS_FAILED";
    case ErrorCode::ReductionFailed: return "REDUCTION_FAILED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::IndexRange: return "INDEX_RANGE";
    case ErrorCode::Usage: return "USAGE";
  }
  return "UNKNOWN";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

u64 reduce_mpz(const mpz_class& value, u64 p) {
  mpz_class r = value % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62U) || !is_prime(p)) {
    throw Error(ErrorCode::Usage, "field modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Field(p);
}

Scalar Field::zero() const {
  Scalar s;
  s.field_ = *this;
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const { return from_mpz(mpz_class(std::to_string(value))); }

Scalar Field::from_mpz(const mpz_class& value) const {
  Scalar s = zero();
  if (is_rational()) {
    s.q_ = value;
  } else {
    s.r_ = reduce_mpz(value, modulus_);
  }
  return s;
}

Scalar Field::from_mpq(const mpq_class& value) const {
  if (is_rational()) {
    Scalar s = zero();
    s.q_ = value;
    s.q_.canonicalize();
    return s;
  }
  Scalar den = from_mpz(value.get_den());
  if (den.is_zero()) {
    throw Error(ErrorCode::DivisionByZero,
                "denominator " + value.get_den().get_str() + " vanishes mod " + std::to_string(modulus_));
  }
  return from_mpz(value.get_num()) / den;
}

Scalar Field::parse(std::string_view text) const {
  auto is_integer = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) return false;
    for (std::size_t i = start; i < t.size(); ++i) {
      if (std::isdigit(static_cast<unsigned char>(t[i])) == 0) return false;
    }
    return true;
  };
  auto to_mpz = [](std::string_view t) {
    std::string s(t);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer(text)) throw Error(ErrorCode::ParseError, "not an integer: \"" + std::string(text) + "\"");
    return from_mpz(to_mpz(text));
  }
  if (!is_rational()) {
    throw Error(ErrorCode::ParseError,
                "fractions are not accepted over " + name() + ": \"" + std::string(text) + "\"");
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) {
    throw Error(ErrorCode::ParseError, "malformed fraction: \"" + std::string(text) + "\"");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: \"" + std::string(text) + "\"");
  mpz_class n = to_mpz(num);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  mpq_class value(n, d);
  value.canonicalize();
  return from_mpq(value);
}

std::string Field::name() const { return is_rational() ? "Q" : "GF(" + std::to_string(modulus_) + ")"; }

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::FieldMismatch, "cannot combine elements of " + field_.name() + " and " + other.field_.name());
  }
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.modulus(); }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = field_.modulus() - r_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    const u64 p = field_.modulus();
    r_ = (r_ >= p - rhs.r_) ? r_ - (p - rhs.r_) : r_ + rhs.r_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ -= rhs.q_;
  } else {
    const u64 p = field_.modulus();
    r_ = (r_ >= rhs.r_) ? r_ - rhs.r_ : r_ + (p - rhs.r_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = mul_mod(r_, rhs.r_, field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_.name());
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
  }
  return out;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = field_.one();
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.field_.is_rational() ? a.q_ < b.q_ : a.r_ < b.r_;
}

std::string Scalar::str() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tdpair
