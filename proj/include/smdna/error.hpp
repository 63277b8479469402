#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace smdna {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A key component is missing, duplicated, unknown or out of range.
class KeyError : public Error {
 public:
  KeyError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Image dimensions are invalid or two images do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unsupported image file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace smdna
