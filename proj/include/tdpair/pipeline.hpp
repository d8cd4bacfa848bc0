#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdpair/instance_io.hpp"
#include "tdpair/operators.hpp"

namespace tdpair {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitCheckFailed = 2, kExitUsage = 3 };

struct RunOptions {
  std::uint64_t seed = 0;
  /// Restrict the invariants section to these ids (all when unset).
  std::optional<std::vector<std::string>> checks;
  bool timing = false;
  /// Prime the instance was reduced into, recorded in the report.
  std::optional<std::uint64_t> reduced_mod;
};

struct Report {
  /// JSON text, schema_version "1", trailing newline.
  std::string json;
  int exit_code = kExitOk;
};

/// TDPAIR_SEED when set (decimal or 0x-hex), else the FNV-1a hash of the input bytes.
std::uint64_t resolve_seed(const std::string& input_bytes);

/// Validation sections only.
Report validate_report(const Instance& inst, const RunOptions& options);

/// Validation plus the scalar, split and operator suites. Throws Usage when
/// options.checks names an unknown id.
Report verify_report(const Instance& inst, const RunOptions& options);

/// Everything built for one validated instance.
struct Built {
  TDSystem system;
  BaseInfo base;
  VarthetaSeq vt;
  EvaluatedFamily ev;
  SplitApparatus sa;
  OperatorPair ops;
};

/// Validates (first standard ordering) and builds all operators. Errors propagate.
Built build_all(const Instance& inst, std::uint64_t seed);

/// One of "delta", "delta-inv", "psi", "commutator-LPsi". Throws Usage otherwise.
Matrix select_operator(const Built& b, const std::string& which);

/// Rows of space-separated exact entries.
std::string format_matrix(const Matrix& m);

}  // namespace tdpair
