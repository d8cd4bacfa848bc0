#pragma once

#include <string>
#include <vector>

#include "tdpair/td_system.hpp"

namespace tdpair {

struct LeonardParameters {
  std::vector<Scalar> theta;
  std::vector<Scalar> theta_star;
  /// Superdiagonal of A*, length d.
  std::vector<Scalar> phi;
};

/// A lower bidiagonal (diagonal theta, subdiagonal 1) and A* upper bidiagonal
/// (diagonal theta*, superdiagonal phi). Checks shapes, distinctness and phi != 0
/// (Usage error otherwise) but does not validate the pair.
TDPair leonard_matrices(const LeonardParameters& params);

/// Builds the pair and returns it only if validate_td_pair accepts it; the
/// validator's error propagates unchanged.
TDPair leonard_generator(const LeonardParameters& params, const ValidationOptions& options = {});

/// Dual split sequence phi'_i = phi_1 vartheta_i + (theta*_i - theta*_0)(theta_{d-i+1} - theta_0).
std::vector<Scalar> dual_phi(const LeonardParameters& params);

/// Names of the shipped parameter families.
std::vector<std::string> preset_names();

/// Parameters of a shipped family at diameter d over ℚ. Throws Usage for an
/// unknown name and PresetInvalid when no admissible phi is found.
LeonardParameters preset_parameters(const std::string& name, std::size_t d);

/// preset_parameters + leonard_generator; validator failures become PresetInvalid.
TDPair generate_preset(const std::string& name, std::size_t d, const ValidationOptions& options = {});

/// Same parameters mapped into another field (entry-wise a/b -> a b^{-1}).
LeonardParameters reduce_parameters(const LeonardParameters& params, Field target);

}  // namespace tdpair
