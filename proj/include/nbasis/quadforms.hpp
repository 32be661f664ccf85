// Fundamental discriminants, reduced binary quadratic forms and the CM
// points attached to them.
#ifndef NBASIS_QUADFORMS_HPP
#define NBASIS_QUADFORMS_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "nbasis/exactmath.hpp"

namespace nbasis {

/// A validated fundamental discriminant of an imaginary quadratic field.
/// Only obtainable through validate_discriminant().
class Discriminant {
 public:
  std::int64_t value() const { return value_; }
  bool is_even() const { return value_ % 4 == 0; }

  friend bool operator==(Discriminant, Discriminant) = default;

 private:
  explicit Discriminant(std::int64_t value) : value_(value) {}
  friend Discriminant validate_discriminant(std::int64_t d);

  std::int64_t value_;
};

/// Throws Error with kind NotNegative, NotCongruent or NotFundamental.
Discriminant validate_discriminant(std::int64_t d);

/// a X^2 + b XY + c Y^2. Ordered lexicographically by (a, b, c).
struct QuadForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const;
  /// -a < b <= a < c, or 0 <= b <= a = c.
  bool is_reduced() const;

  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuadForm& q);

/// All reduced forms of discriminant d: one per class of C(d). Sorted by
/// (a, b, c), so the principal form (a = 1) comes first. This order is part
/// of the API since conjugate indices are numbered by it.
std::vector<QuadForm> reduced_forms(const Discriminant& d);

/// Generator of the ring of integers: sqrt(d)/2 if d = 0 (mod 4),
/// (-1 + sqrt(d))/2 otherwise.
QuadIrrational theta(const Discriminant& d);

/// The CM point (-b + sqrt(d)) / 2a of a form.
QuadIrrational theta_of_form(const QuadForm& q, const Discriminant& d);

/// Minimal polynomial X^2 + B X + C of theta over Q.
struct ThetaPoly {
  std::int64_t B = 0;
  std::int64_t C = 0;

  friend bool operator==(const ThetaPoly&, const ThetaPoly&) = default;
};

ThetaPoly theta_min_poly(const Discriminant& d);

}  // namespace nbasis

#endif  // NBASIS_QUADFORMS_HPP
