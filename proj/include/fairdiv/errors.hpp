#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

// Bad input: malformed files, violated preconditions, impossible requests.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The exhaustive oracle refuses instances beyond its enumeration budget.
struct SizeGuardError : std::runtime_error {
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fairdiv
