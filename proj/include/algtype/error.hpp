#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algtype {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: files, term text, tables, signatures.
class LoadError : public Error {
 public:
  using Error::Error;
};

// A term or algebra was used with an incompatible signature.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

// A bounded enumeration would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t required, std::size_t cap)
      : Error("enumeration would produce " + std::to_string(required) +
              " items, cap is " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  // Saturates at SIZE_MAX.
  std::size_t required() const { return required_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

}  // namespace algtype
