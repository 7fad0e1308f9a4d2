#pragma once

#include <string>
#include <vector>

namespace tfg {

enum class Verdict { Pass, Fail, Inapplicable };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

/// One record per check: a stable name, a short anchor describing which
/// statement was checked, the verdict, and a witness on failure.
struct CheckRecord {
  std::string name;
  std::string ref;
  Verdict verdict = Verdict::Pass;
  std::string witness;
};

struct Report {
  std::vector<CheckRecord> checks;

  void add(std::string name, std::string ref, bool pass, std::string witness = "") {
    checks.push_back({std::move(name), std::move(ref),
                      pass ? Verdict::Pass : Verdict::Fail, std::move(witness)});
  }
  void add_inapplicable(std::string name, std::string ref, std::string why) {
    checks.push_back({std::move(name), std::move(ref), Verdict::Inapplicable, std::move(why)});
  }

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::Fail) return false;
    return true;
  }
  size_t failures() const {
    size_t n = 0;
    for (const auto& c : checks)
      if (c.verdict == Verdict::Fail) ++n;
    return n;
  }
  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
};

}  // namespace tfg
