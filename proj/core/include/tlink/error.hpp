#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlink {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word or tree text; `offset()` is the byte position of the fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A parameter lies outside the domain where the operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or state sum would exceed its configured resource cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace tlink
