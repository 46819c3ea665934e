#pragma once

#include <stdexcept>
#include <string>

namespace nmfo {

// Base for every error this library throws on bad input or a violated
// precondition. Unsafe ω-model results are values, not errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct ArityError : Error { using Error::Error; };
struct ChainError : Error { using Error::Error; };
struct ModelError : Error { using Error::Error; };
struct EmbeddingError : Error { using Error::Error; };

}  // namespace nmfo
