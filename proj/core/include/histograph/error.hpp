#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace histograph {

/// Malformed input text. Carries the 1-based line number, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a data contract (bad node id, empty sample, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A collection document that does not follow the collection file schema.
class SchemaError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace histograph
