#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mhg {

struct CheckFailure {
  int degree = -1;          // first failing x-degree, or -1 if not degree-indexed
  std::string where;        // extra location, e.g. "p=2 s=1"
  std::string expected;
  std::string actual;
};

struct Report {
  std::string check;
  int n = 0;
  int order = 0;
  bool pass = false;
  std::optional<CheckFailure> failure;
  std::map<std::string, std::string> details;  // observations (minimal period, degrees, ...)

  static Report ok(std::string check, int n, int order) {
    Report r;
    r.check = std::move(check);
    r.n = n;
    r.order = order;
    r.pass = true;
    return r;
  }
  static Report fail(std::string check, int n, int order, CheckFailure f) {
    Report r;
    r.check = std::move(check);
    r.n = n;
    r.order = order;
    r.pass = false;
    r.failure = std::move(f);
    return r;
  }
};

inline bool all_pass(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace mhg
