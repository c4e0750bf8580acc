#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace operad {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape, arity or degree mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the given input (planar action, 0-ary basis, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Byte offsets [start, end) into a parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(message + " at " + std::to_string(span.start) + ".." + std::to_string(span.end)),
        span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

}  // namespace operad
