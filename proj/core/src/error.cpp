#include "histograph/error.hpp"

namespace histograph {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

}  // namespace histograph
