#ifndef NBASIS_ERROR_HPP
#define NBASIS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nbasis {

enum class ErrorKind {
  kInvalidArgument,
  kNotNegative,
  kNotCongruent,
  kNotFundamental,
  kExcludedField,
  kPrecisionUnachievable,
  kDegenerateValue,
  kSnapFailure,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported as an Error carrying its kind, so the
/// CLI can map them onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nbasis

#endif  // NBASIS_ERROR_HPP
