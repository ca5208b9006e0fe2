#pragma once

#include <stdexcept>
#include <string>

namespace maxarc {

// Exit-code mapping used by the CLI: parse/parameter -> 2,
// validation -> 3, internal consistency -> 4.

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct parameter_error : std::runtime_error {
  explicit parameter_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct context_error : std::runtime_error {
  explicit context_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Signals a state that the theory says cannot happen (e.g. a verified
// 52-clique that fails plane reconstruction).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace maxarc
