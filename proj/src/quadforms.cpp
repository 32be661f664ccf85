#include "nbasis/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "nbasis/error.hpp"

namespace nbasis {

namespace {

// Forms are enumerated with 64-bit arithmetic; b^2 - 4ac must not overflow.
constexpr std::int64_t kMaxAbsDiscriminant = std::int64_t{1} << 60;

bool is_squarefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Discriminant validate_discriminant(std::int64_t d) {
  if (d >= 0) {
    throw Error(ErrorKind::kNotNegative,
                "discriminant must be negative, got " + std::to_string(d));
  }
  if (d < -kMaxAbsDiscriminant) {
    throw Error(ErrorKind::kInvalidArgument,
                "discriminant too large: " + std::to_string(d));
  }
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r != 0 && r != 1) {
    throw Error(ErrorKind::kNotCongruent,
                "discriminant must be 0 or 1 mod 4, got " + std::to_string(d));
  }
  const auto magnitude = static_cast<std::uint64_t>(-d);
  if (r == 1) {
    if (!is_squarefree(magnitude)) {
      throw Error(ErrorKind::kNotFundamental,
                  std::to_string(d) + " is not squarefree");
    }
  } else {
    const std::int64_t m = d / 4;
    const std::int64_t m_mod4 = ((m % 4) + 4) % 4;
    if (m_mod4 != 2 && m_mod4 != 3) {
      throw Error(ErrorKind::kNotFundamental,
                  std::to_string(d) + " = 4*" + std::to_string(m) +
                      " with " + std::to_string(m) + " = " +
                      std::to_string(m_mod4) + " mod 4");
    }
    if (!is_squarefree(magnitude / 4)) {
      throw Error(ErrorKind::kNotFundamental,
                  std::to_string(d) + " = 4*" + std::to_string(m) +
                      " with " + std::to_string(m) + " not squarefree");
    }
  }
  return Discriminant(d);
}

bool QuadForm::is_primitive() const {
  return std::gcd(std::gcd(a, b), c) == 1;
}

bool QuadForm::is_reduced() const {
  return (-a < b && b <= a && a < c) || (0 <= b && b <= a && a == c);
}

std::ostream& operator<<(std::ostream& os, const QuadForm& q) {
  return os << "(" << q.a << "," << q.b << "," << q.c << ")";
}

std::vector<QuadForm> reduced_forms(const Discriminant& d) {
  const std::int64_t disc = d.value();
  // A reduced form has 3a^2 <= 4ac - b^2 = |d|.
  const std::int64_t a_max = isqrt(-disc / 3);
  std::vector<QuadForm> forms;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t numerator = b * b - disc;
      if (numerator % (4 * a) != 0) continue;
      const QuadForm q{a, b, numerator / (4 * a)};
      if (q.is_reduced() && q.is_primitive()) forms.push_back(q);
    }
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

QuadIrrational theta(const Discriminant& d) {
  return QuadIrrational(d.is_even() ? 0 : -1, 2, BigInt(d.value()));
}

QuadIrrational theta_of_form(const QuadForm& q, const Discriminant& d) {
  return QuadIrrational(BigInt(-q.b), BigInt(2 * q.a), BigInt(d.value()));
}

ThetaPoly theta_min_poly(const Discriminant& d) {
  if (d.is_even()) return {0, -d.value() / 4};
  return {1, (1 - d.value()) / 4};
}

}  // namespace nbasis
