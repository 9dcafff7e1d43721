#include "knotoid/error.hpp"

namespace knotoid {

namespace {

std::string located(const std::string& message, std::size_t line, std::size_t token) {
  std::string out;
  if (line != 0) out += "line " + std::to_string(line) + ": ";
  if (token != 0) out += "token " + std::to_string(token) + ": ";
  return out + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t token)
    : Error(located(message, line, token)), detail_(message), line_(line), token_(token) {}

UnknownChord::UnknownChord(std::size_t id) : Error("unknown chord " + std::to_string(id)) {}

PolicyMismatch::PolicyMismatch() : Error("invariants built under different reduction policies") {}

}  // namespace knotoid
