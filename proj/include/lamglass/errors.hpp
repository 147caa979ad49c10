#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lamglass {

/// Raised when a model document or a model object violates one of its invariants.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the reduced KKT matrix has a (near-)zero pivot.
///
/// `dof()` is the index in the full (unreduced) system of the unknown whose
/// pivot collapsed; this usually points at an unrestrained rigid-body mode.
class SingularSystemError : public std::runtime_error {
 public:
  SingularSystemError(const std::string& what, std::size_t dof)
      : std::runtime_error(what), dof_(dof) {}

  std::size_t dof() const noexcept { return dof_; }

 private:
  std::size_t dof_;
};

}  // namespace lamglass
