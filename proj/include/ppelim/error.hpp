#pragma once

#include <stdexcept>
#include <string>

namespace ppelim {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(std::string const& what) : std::runtime_error(what) {}
};

// Malformed text input (module specs, formulas, family files).
struct ParseError : Error {
  ParseError(std::string const& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  explicit ParseError(std::string const& what) : Error(what), line(0), column(0) {}
  int line;
  int column;
};

// Two values from different ambient modules / arities were mixed.
struct AmbientMismatch : Error {
  using Error::Error;
};

// A configured resource bound was hit; the message names the bound.
struct CapExceeded : Error {
  using Error::Error;
};

// An operation that needs a finite module got an infinite one.
struct InfiniteModule : Error {
  using Error::Error;
};

}  // namespace ppelim
