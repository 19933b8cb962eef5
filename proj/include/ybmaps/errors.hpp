#ifndef YBMAPS_ERRORS_HPP
#define YBMAPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ybmaps {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A map or matrix builder was evaluated on its singular set.
/// `factor` names the operator that failed, e.g. "R_13 in T_1".
struct SingularInput : Error {
  SingularInput(const std::string& what, std::string factor_name = {})
      : Error(what), factor(std::move(factor_name)) {}
  std::string factor;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DimensionTooLarge : Error {
  using Error::Error;
};

struct NotFactorizable : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace ybmaps

#endif
