#include "tdpair/checks.hpp"

namespace tdpair {

CheckResult& CheckList::slot(const std::string& id) {
  for (auto& r : results_)
    if (r.id == id) return r;
  results_.push_back({id, CheckStatus::Pass, {}});
  return results_.back();
}

void CheckList::touch(const std::string& id) { slot(id); }

void CheckList::expect(const std::string& id, bool ok, const std::string& detail) {
  CheckResult& r = slot(id);
  if (ok || r.status == CheckStatus::Fail) return;
  r.status = CheckStatus::Fail;
  r.detail = detail;
}

void CheckList::skip(const std::string& id, const std::string& why) {
  CheckResult& r = slot(id);
  if (r.status == CheckStatus::Fail) return;
  r.status = CheckStatus::Skipped;
  r.detail = why;
}

void CheckList::append(const std::vector<CheckResult>& more) {
  for (const auto& r : more) {
    if (r.status == CheckStatus::Skipped) {
      skip(r.id, r.detail);
    } else {
      expect(r.id, r.status == CheckStatus::Pass, r.detail);
    }
  }
}

bool CheckList::all_passed() const {
  for (const auto& r : results_)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

}  // namespace tdpair
