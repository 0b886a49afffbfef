#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace urbansir {

/// Invalid or infeasible parameters (bad config keys, empty territories, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or malformed input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant. Seeing one of these is a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

void log_warning(std::string_view message);
void log_info(std::string_view message);

/// Suppresses informational output (warnings are always printed).
void set_quiet(bool quiet);

}  // namespace urbansir
