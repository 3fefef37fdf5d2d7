#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ordpat {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

// One checked axiom or property. A failing check always carries at least one
// concrete witness a reader can re-verify by hand; a skipped check says in
// `note` why it does not apply.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::string> witnesses;
  std::string note;

  static CheckResult pass(std::string name, std::string note = {}) {
    return {std::move(name), CheckStatus::Pass, {}, std::move(note)};
  }
  static CheckResult fail(std::string name, std::vector<std::string> witnesses,
                          std::string note = {}) {
    return {std::move(name), CheckStatus::Fail, std::move(witnesses),
            std::move(note)};
  }
  static CheckResult skip(std::string name, std::string note,
                          std::vector<std::string> witnesses = {}) {
    return {std::move(name), CheckStatus::Skip, std::move(witnesses),
            std::move(note)};
  }
};

struct Report {
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
      return c.status == CheckStatus::Fail;
    });
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

// Plain-text rendering, one line per check.
inline std::string to_text(const Report& r) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    os << c.name << std::string(width - c.name.size() + 2, ' ')
       << to_string(c.status);
    if (!c.note.empty()) os << "  (" << c.note << ")";
    if (!c.witnesses.empty()) {
      os << "  witnesses:";
      for (const auto& w : c.witnesses) os << " " << w;
    }
    os << "\n";
  }
  os << (r.ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

}  // namespace ordpat
