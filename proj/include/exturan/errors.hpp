#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exturan {

// Parameter or input outside an operation's stated domain.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed serialized input; byte_offset points at the offending byte.
struct parse_error : std::runtime_error {
  std::size_t byte_offset;
  parse_error(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"),
        byte_offset(off) {}
};

// Problem size exceeds a configured enumeration or solver budget.
struct scale_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic self-check that must never fire.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace exturan
