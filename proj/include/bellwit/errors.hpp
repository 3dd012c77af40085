#ifndef BELLWIT_ERRORS_HPP
#define BELLWIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bellwit {

/// Base class for all library errors. CLI maps these to exit code 1.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument value (m < 2, wrong vector length, shape mismatch, ...).
class invalid_parameter : public error {
 public:
  using error::error;
};

/// The operation has no meaning for this tensor family.
class unsupported_family : public error {
 public:
  using error::error;
};

/// Enumeration would exceed the documented 2^(m-1) budget.
class budget_exceeded : public error {
 public:
  using error::error;
};

/// No closed form exists for the requested quantity.
class not_available : public error {
 public:
  using error::error;
};

/// Matrix fails the modified-circulant structure check.
class not_mod_circulant : public error {
 public:
  using error::error;
};

/// Input data (files, correlator entries) violates an invariant.
class invalid_data : public error {
 public:
  using error::error;
};

/// State vector is not normalized.
class invalid_state : public error {
 public:
  using error::error;
};

}  // namespace bellwit

#endif
