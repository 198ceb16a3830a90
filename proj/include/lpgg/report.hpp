#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lpgg {

/// Outcome of one verified claim. pass_corrected means the claim holds once
/// a coefficient (or term) is replaced by the independently derived one.
enum class Status { pass, pass_corrected, fail, skipped };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::pass_corrected:
      return "pass-corrected";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "fail";
}

struct Check {
  std::string name;
  /// Short statement of what is checked, e.g. "a_i . a_j = 1/2".
  std::string claim;
  Status status = Status::pass;
  std::string details;
};

inline Check make_check(std::string name, std::string claim, bool ok, std::string details = {}) {
  return {std::move(name), std::move(claim), ok ? Status::pass : Status::fail, std::move(details)};
}

/// One line of a coefficient comparison: the stated coefficients and the
/// ones that actually make the identity hold.
struct IdentityLine {
  std::string identity;
  Status status = Status::fail;
  std::vector<std::string> paper_coefficients;
  std::vector<std::string> derived_coefficients;
  std::string details;
};

inline Check to_check(const IdentityLine& line, std::string name) {
  std::string details = line.details;
  if (line.status == Status::pass_corrected) {
    std::string stated;
    std::string derived;
    for (std::size_t k = 0; k < line.paper_coefficients.size(); ++k) {
      stated += (k ? ", " : "") + line.paper_coefficients[k];
    }
    for (std::size_t k = 0; k < line.derived_coefficients.size(); ++k) {
      derived += (k ? ", " : "") + line.derived_coefficients[k];
    }
    details = "stated (" + stated + "), derived (" + derived + ")" + (details.empty() ? "" : "; " + details);
  }
  return {std::move(name), line.identity, line.status, std::move(details)};
}

struct Summary {
  int pass = 0;
  int pass_corrected = 0;
  int fail = 0;
  int skipped = 0;
};

struct VerificationReport {
  std::string suite;
  unsigned long long seed = 0;
  std::vector<Check> checks;
  /// "exact" or "approx".
  std::string backend = "exact";

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  Summary summary() const {
    Summary s;
    for (const auto& c : checks) {
      switch (c.status) {
        case Status::pass:
          ++s.pass;
          break;
        case Status::pass_corrected:
          ++s.pass_corrected;
          break;
        case Status::fail:
          ++s.fail;
          break;
        case Status::skipped:
          ++s.skipped;
          break;
      }
    }
    return s;
  }

  bool corrected() const { return summary().pass_corrected > 0; }

  /// 0 when nothing failed (pass-corrected included), 1 otherwise.
  int exit_code() const { return summary().fail > 0 ? 1 : 0; }
};

}  // namespace lpgg
