#pragma once

#include <stdexcept>
#include <string>

namespace ccert {

// Resource cap exceeded (hyperplane or body limits). Reported explicitly;
// results are never silently truncated.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ccert
