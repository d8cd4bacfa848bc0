#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "tdpair/checks.hpp"
#include "tdpair/polynomial.hpp"
#include "tdpair/td_system.hpp"

namespace tdpair {

/// tau_ij = (x - theta_i)...(x - theta_{j-1}) and
/// eta_ij = (x - theta_{d-i})...(x - theta_{d-j+1}) for 0 <= i <= j <= d+1.
/// tau(i, i-1) and eta(i, i-1) are the zero polynomial.
class PolyFamily {
 public:
  explicit PolyFamily(std::vector<Scalar> theta);

  std::size_t d() const { return theta_.size() - 1; }
  Field field() const { return theta_.front().field(); }
  const std::vector<Scalar>& theta() const { return theta_; }

  /// Throws IndexRange outside 0 <= i, i-1 <= j <= d+1.
  const Polynomial& tau(std::size_t i, std::size_t j) const;
  const Polynomial& eta(std::size_t i, std::size_t j) const;

 private:
  const Polynomial& lookup(const std::vector<std::vector<Polynomial>>& table, std::size_t i, std::size_t j) const;

  std::vector<Scalar> theta_;
  std::vector<std::vector<Polynomial>> tau_;
  std::vector<std::vector<Polynomial>> eta_;
  Polynomial zero_;
};

struct VarthetaSeq {
  /// vartheta_0 .. vartheta_{d+1}
  std::vector<Scalar> values;
  /// vartheta_i != 0 for 1 <= i <= d
  bool all_nonzero = true;
};

/// vartheta_i = sum_{h<i} (theta_h - theta_{d-h}) / (theta_0 - theta_d) from the
/// defining sum, checked against the closed form for the base case. Throws
/// ClosedFormMismatch.
VarthetaSeq vartheta(const std::vector<Scalar>& theta, const BaseInfo& base);

/// Case whose formulas apply to a sequence of diameter d with this base. For
/// d <= 2 the configured beta is classified as if d were large enough.
BaseCase formula_case(const BaseInfo& base, std::size_t d);

/// Closed form of vartheta_i for diameter d, evaluated without q.
Scalar vartheta_closed_form(const BaseInfo& base, std::size_t d, std::size_t i);

/// (q^{a/2} - q^{-a/2}) / (q^{b/2} - q^{-b/2}) with q + 1/q = beta, for a = b mod 2.
/// Computed from the recurrences that these ratios satisfy in beta.
Scalar qint_ratio(const Scalar& beta, long a, long b);

/// prod [num_k] / prod [den_k] where [n] = q^{n/2} - q^{-n/2}; the lists must
/// have equal length. Throws UnsupportedCase if the result is not in the field.
Scalar qint_product_ratio(const Scalar& beta, const std::vector<long>& num, const std::vector<long>& den);

/// (theta_r - theta_s)/(theta_i - theta_j) for i + j = r + s, i != j, by the
/// base-case formula.
Scalar eigenvalue_ratio_formula(const BaseInfo& base, long i, long j, long r, long s);

/// The symmetric scalars [r,s,t] for r + s + t <= d.
class BracketTable {
 public:
  BracketTable(const std::vector<Scalar>& theta, const BaseInfo& base);

  std::size_t d() const { return d_; }
  /// Throws IndexRange when r + s + t > d.
  const Scalar& operator()(std::size_t r, std::size_t s, std::size_t t) const;

 private:
  std::size_t d_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> table_;
};

/// One bracket from the base-case definition, or (generic base) from the
/// vartheta ratio product on the window theta_0..theta_{r+s+t}.
Scalar bracket(std::size_t r, std::size_t s, std::size_t t, const std::vector<Scalar>& theta, const BaseInfo& base);

/// prod_{k<r} vartheta'_{r+s-k} / vartheta'_{r+s+t-k}, where vartheta' is built
/// from the prefix theta_0..theta_{r+s+t}. Throws UnsupportedCase on a zero
/// denominator.
Scalar bracket_by_window(std::size_t r, std::size_t s, std::size_t t, const std::vector<Scalar>& theta);

/// Generic-base bracket evaluated as a ratio of q-integers in beta.
Scalar bracket_by_qintegers(std::size_t r, std::size_t s, std::size_t t, const Scalar& beta);

/// Coefficients c_h (0 <= h <= j-i) with tau_ij = sum_h c_h eta_{i,j-h}.
std::vector<Scalar> tau_to_eta(const PolyFamily& f, const BracketTable& br, std::size_t i, std::size_t j);
/// Coefficients c_h with eta_ij = sum_h c_h tau_{i,j-h}.
std::vector<Scalar> eta_to_tau(const PolyFamily& f, const BracketTable& br, std::size_t i, std::size_t j);

/// Everything derived from one eigenvalue sequence.
struct ScalarData {
  BaseInfo base;
  PolyFamily family;
  VarthetaSeq vt;
  BracketTable brackets;
};

ScalarData scalar_data(const TDSystem& s, const BaseInfo& base);

/// Exhaustive scalar identity suite; one result per identity family.
std::vector<CheckResult> verify_scalar_identities(const TDSystem& s, const ScalarData& data);

}  // namespace tdpair
