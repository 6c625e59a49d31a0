#include "orient/guard.hpp"

#include <cstdlib>
#include <string_view>

namespace orient {

bool guards_overridden() {
  const char* value = std::getenv(kGuardOverrideEnv);
  if (value == nullptr) return false;
  const std::string_view v(value);
  return !v.empty() && v != "0";
}

void enforce_guard(const std::string& what, long long value, long long limit) {
  if (value <= limit || guards_overridden()) return;
  throw GuardExceeded(what + ": " + std::to_string(value) + " exceeds guard " +
                      std::to_string(limit) + " (set " + kGuardOverrideEnv + "=1 to lift)");
}

}  // namespace orient
