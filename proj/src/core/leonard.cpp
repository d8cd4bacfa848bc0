#include "tdpair/leonard.hpp"

#include <functional>
#include <map>

namespace tdpair {

namespace {

std::size_t diameter_of(const LeonardParameters& p) {
  if (p.theta.size() < 2) throw Error(ErrorCode::Usage, "need at least two eigenvalues");
  const std::size_t d = p.theta.size() - 1;
  if (p.theta_star.size() != d + 1) throw Error(ErrorCode::Usage, "theta and theta* have different lengths");
  if (p.phi.size() != d) throw Error(ErrorCode::Usage, "phi must have length d = " + std::to_string(d));
  return d;
}

void require_distinct(const std::vector<Scalar>& xs, const char* name) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) {
        throw Error(ErrorCode::Usage, std::string(name) + " entries " + std::to_string(i) + " and " +
                                          std::to_string(j) + " coincide");
      }
}

/// sum_{h<i} (theta_h - theta_{d-h}) / (theta_0 - theta_d)
Scalar partial_ratio(const std::vector<Scalar>& theta, std::size_t i) {
  const std::size_t d = theta.size() - 1;
  const Field f = theta.front().field();
  Scalar acc = f.zero();
  for (std::size_t h = 0; h < i; ++h) acc += theta[h] - theta[d - h];
  return acc / (theta[0] - theta[d]);
}

/// phi_i from phi'_1 by the split-sequence relation.
std::vector<Scalar> phi_from(const std::vector<Scalar>& theta, const std::vector<Scalar>& theta_star,
                             const Scalar& dual_phi_1) {
  const std::size_t d = theta.size() - 1;
  std::vector<Scalar> phi;
  for (std::size_t i = 1; i <= d; ++i) {
    phi.push_back(dual_phi_1 * partial_ratio(theta, i) + (theta_star[i] - theta_star[0]) * (theta[i - 1] - theta[d]));
  }
  return phi;
}

Scalar pow2(long k) {
  const Field f = Field::rational();
  mpq_class v = 1;
  if (k >= 0) {
    mpz_class num = 1;
    num <<= static_cast<mp_bitcnt_t>(k);
    v = mpq_class(num);
  } else {
    mpz_class den = 1;
    den <<= static_cast<mp_bitcnt_t>(-k);
    v = mpq_class(mpz_class(1), den);
  }
  return f.from_mpq(v);
}

struct Family {
  std::function<Scalar(long)> theta;
  std::function<Scalar(long)> theta_star;
  /// Fixed phi_1, or nullopt to search small integers.
  std::function<std::optional<Scalar>(std::size_t)> phi_1;
};

const std::map<std::string, Family>& families() {
  static const std::map<std::string, Family> table = [] {
    const Field q = Field::rational();
    std::map<std::string, Family> t;
    // Placeholders for d are resolved in preset_parameters.
    t["krawtchouk"] = Family{nullptr, nullptr, [q](std::size_t d) {
                               return std::optional<Scalar>(q.from_int(-2 * static_cast<long long>(d)));
                             }};
    t["qracah"] = Family{[](long i) { return pow2(i) + pow2(-i) * Field::rational().from_int(3); },
                         [](long i) { return pow2(i) + pow2(-i) * Field::rational().from_int(5); },
                         [](std::size_t) { return std::optional<Scalar>(); }};
    t["racah"] = Family{[q](long i) { return q.from_int(i * (i + 3)); }, [q](long i) { return q.from_int(i * (i + 4)); },
                        [](std::size_t) { return std::optional<Scalar>(); }};
    t["bannai_ito"] = Family{[q](long i) { return q.from_int((i % 2 == 0 ? 1 : -1) * (1 + 2 * i)); },
                             [q](long i) { return q.from_int((i % 2 == 0 ? 1 : -1) * (2 + i)); },
                             [](std::size_t) { return std::optional<Scalar>(); }};
    return t;
  }();
  return table;
}

bool all_nonzero(const std::vector<Scalar>& xs) {
  for (const auto& x : xs)
    if (x.is_zero()) return false;
  return true;
}

}  // namespace

TDPair leonard_matrices(const LeonardParameters& params) {
  const std::size_t d = diameter_of(params);
  const Field f = params.theta.front().field();
  for (const auto* seq : {&params.theta, &params.theta_star, &params.phi})
    for (const auto& x : *seq)
      if (x.field() != f) throw Error(ErrorCode::FieldMismatch, "parameters over different fields");
  require_distinct(params.theta, "theta");
  require_distinct(params.theta_star, "theta*");
  for (std::size_t i = 0; i < d; ++i) {
    if (params.phi[i].is_zero()) throw Error(ErrorCode::Usage, "phi_" + std::to_string(i + 1) + " is zero");
  }
  TDPair p{Matrix(f, d + 1, d + 1), Matrix(f, d + 1, d + 1)};
  for (std::size_t i = 0; i <= d; ++i) {
    p.A(i, i) = params.theta[i];
    p.A_star(i, i) = params.theta_star[i];
    if (i > 0) {
      p.A(i, i - 1) = f.one();
      p.A_star(i - 1, i) = params.phi[i - 1];
    }
  }
  return p;
}

TDPair leonard_generator(const LeonardParameters& params, const ValidationOptions& options) {
  TDPair p = leonard_matrices(params);
  validate_td_pair(p, options);
  return p;
}

std::vector<Scalar> dual_phi(const LeonardParameters& params) {
  const std::size_t d = diameter_of(params);
  const auto& th = params.theta;
  const auto& ts = params.theta_star;
  std::vector<Scalar> out;
  for (std::size_t i = 1; i <= d; ++i) {
    out.push_back(params.phi[0] * partial_ratio(th, i) + (ts[i] - ts[0]) * (th[d - i + 1] - th[0]));
  }
  return out;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, fam] : families()) out.push_back(name);
  return out;
}

LeonardParameters preset_parameters(const std::string& name, std::size_t d) {
  const auto it = families().find(name);
  if (it == families().end()) throw Error(ErrorCode::Usage, "unknown preset \"" + name + "\"");
  if (d < 1 || d > 8) throw Error(ErrorCode::Usage, "preset diameter must be between 1 and 8");
  const Family& fam = it->second;
  const Field q = Field::rational();
  LeonardParameters p;
  for (std::size_t i = 0; i <= d; ++i) {
    const auto li = static_cast<long>(i);
    if (name == "krawtchouk") {
      p.theta.push_back(q.from_int(static_cast<long long>(d) - 2 * li));
      p.theta_star.push_back(q.from_int(static_cast<long long>(d) - 2 * li));
    } else {
      p.theta.push_back(fam.theta(li));
      p.theta_star.push_back(fam.theta_star(li));
    }
  }
  // phi'_1 = phi_1 - (theta*_1 - theta*_0)(theta_0 - theta_d)
  const Scalar shift = (p.theta_star[1] - p.theta_star[0]) * (p.theta[0] - p.theta[d]);
  std::vector<Scalar> candidates;
  if (auto fixed = fam.phi_1(d)) {
    candidates.push_back(*fixed);
  } else {
    for (long long k = 1; k <= 60; ++k) {
      candidates.push_back(q.from_int(k));
      candidates.push_back(q.from_int(-k));
    }
  }
  for (const auto& phi_1 : candidates) {
    p.phi = phi_from(p.theta, p.theta_star, phi_1 - shift);
    if (all_nonzero(p.phi) && all_nonzero(dual_phi(p))) return p;
  }
  throw Error(ErrorCode::PresetInvalid, "no admissible phi for preset " + name + " at d = " + std::to_string(d));
}

TDPair generate_preset(const std::string& name, std::size_t d, const ValidationOptions& options) {
  const LeonardParameters p = preset_parameters(name, d);
  try {
    return leonard_generator(p, options);
  } catch (const Error& e) {
    throw Error(ErrorCode::PresetInvalid, "preset " + name + " at d = " + std::to_string(d) + " failed validation: " + e.what());
  }
}

LeonardParameters reduce_parameters(const LeonardParameters& params, Field target) {
  auto map = [&](const std::vector<Scalar>& xs) {
    std::vector<Scalar> out;
    for (const auto& x : xs) {
      if (!x.field().is_rational()) throw Error(ErrorCode::FieldMismatch, "only rational parameters can be reduced");
      out.push_back(target.from_mpq(x.rational_value()));
    }
    return out;
  };
  return {map(params.theta), map(params.theta_star), map(params.phi)};
}

}  // namespace tdpair
