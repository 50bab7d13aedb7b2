#pragma once

#include <string>
#include <vector>

namespace parsmash {

/// warn: a failed check downgraded by configuration.
enum class Status { pass, fail, warn, skipped, unavailable };

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string witness;

  bool ok() const noexcept { return status != Status::fail; }
};

inline Check pass(std::string name) { return {std::move(name), Status::pass, {}}; }
inline Check fail(std::string name, std::string witness) {
  return {std::move(name), Status::fail, std::move(witness)};
}
inline Check verdict(std::string name, bool ok, std::string witness_if_failed = {}) {
  return ok ? pass(std::move(name)) : fail(std::move(name), std::move(witness_if_failed));
}

inline bool all_ok(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::warn: return "warn";
    case Status::skipped: return "skipped";
    case Status::unavailable: return "unavailable";
  }
  return "unknown";
}

}  // namespace parsmash
