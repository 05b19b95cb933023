#pragma once

#include <stdexcept>
#include <string>

namespace splitalg {

// Kinds mirror the failure surfaces exposed through the C API.
enum class ErrorKind {
  Parse,     // malformed input text / schema
  Invalid,   // structurally invalid data (graph axioms, surface checks, ...)
  Argument,  // bad call arguments (out-of-range indices, mixed lengths, ...)
  Internal,  // broken invariant inside the library
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace splitalg
