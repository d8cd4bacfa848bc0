#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tdpair/td_system.hpp"

namespace tdpair {

/// Contents of an instance file.
struct Instance {
  TDPair pair;
  std::string name;
  std::optional<std::size_t> expected_d;
  std::optional<std::string> expected_beta;
};

/// Parses the JSON instance format:
///   {"field": "rational" | {"prime": p}, "A": [[..]], "A_star": [[..]],
///    "metadata": {"name", "expected_d", "expected_beta"}}
/// Entries are strings ("n/d" over Q, residues over GF(p)); plain JSON
/// integers are accepted too. Throws ParseError naming the offending field.
Instance parse_instance(const std::string& text);

/// Serializes with a fixed key order, one matrix row per line.
std::string write_instance(const Instance& inst);

/// Maps a rational instance into GF(p). Throws ReductionFailed when an entry
/// has a denominator divisible by p or the instance is not over Q.
Instance reduce_instance(const Instance& inst, std::uint64_t p);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace tdpair
