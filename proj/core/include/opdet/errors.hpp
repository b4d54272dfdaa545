#pragma once

#include <stdexcept>
#include <string>

namespace opdet {

// Thrown when an input exceeds the size cap configured for an operation.
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed matrix or function input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace opdet
