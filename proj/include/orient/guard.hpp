#pragma once

#include <stdexcept>
#include <string>

namespace orient {

/// Raised when an enumeration would exceed its size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Environment variable that lifts every enumeration guard. Unsafe: the
/// guarded routines are exponential.
inline constexpr const char* kGuardOverrideEnv = "ORIENT_AVOID_GUARD_OVERRIDE";

bool guards_overridden();

/// Throws GuardExceeded when `value > limit`, unless guards are overridden.
void enforce_guard(const std::string& what, long long value, long long limit);

}  // namespace orient
