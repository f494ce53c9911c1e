#pragma once

#include <stdexcept>
#include <string>

namespace rspunct {

// A brute-force search or enumeration would exceed its configured resource
// cap. Callers must treat this as "refused", never as a verdict.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter combination lies outside the feasible region of the rate/radius
// constraint system. The message names the violated constraint.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rspunct
