#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace finbool {

enum class CheckStatus { pass, fail, skip };

inline const char* check_status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skip:
      return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  nlohmann::json details;  // witnesses and counts; no timing data
  double ms = 0.0;
};

inline nlohmann::json check_to_json(const CheckResult& c) {
  return nlohmann::json{{"id", c.id},
                        {"name", c.name},
                        {"status", check_status_str(c.status)},
                        {"details", c.details},
                        {"ms", c.ms}};
}

}  // namespace finbool
