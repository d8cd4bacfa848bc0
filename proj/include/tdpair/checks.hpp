#pragma once

#include <string>
#include <vector>

namespace tdpair {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  /// First failing index tuple, or why the check was skipped.
  std::string detail;
};

/// Accumulates one result per id; the first failure recorded for an id wins.
class CheckList {
 public:
  /// Registers `id` as passing unless a failure was already recorded.
  void touch(const std::string& id);
  /// Records `ok` for `id`; on failure keeps the first detail.
  void expect(const std::string& id, bool ok, const std::string& detail = {});
  void skip(const std::string& id, const std::string& why);
  void append(const std::vector<CheckResult>& more);

  const std::vector<CheckResult>& results() const { return results_; }
  bool all_passed() const;

 private:
  CheckResult& slot(const std::string& id);
  std::vector<CheckResult> results_;
};

}  // namespace tdpair
