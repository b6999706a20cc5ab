#pragma once

#include <stdexcept>
#include <string>

namespace gdd {

// Malformed or inconsistent external data: code files, .grep files, word lists.
struct format_error : std::runtime_error {
  explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural invariant that must hold by construction was observed broken.
struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Refusal to run an operation above its configured size cap.
struct scale_error : std::runtime_error {
  explicit scale_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gdd
