#pragma once

#include <stdexcept>
#include <string>

namespace sbw {

// Malformed or out-of-contract user input (spec files, PD codes, flag
// values). The CLI maps this to exit code 2.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sbw
