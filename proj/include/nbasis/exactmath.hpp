// Exact and arbitrary-precision arithmetic used by the rest of the library.
//
// BigRational and QuadIrrational are exact (GMP backed). BigFloat and
// BigComplex are MPFR backed; every value carries its own precision and
// binary operations run at the larger precision of their operands, rounding
// to nearest. There is no global precision state.
#ifndef NBASIS_EXACTMATH_HPP
#define NBASIS_EXACTMATH_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace nbasis {

using BigInt = mpz_class;

/// Number of significant bits a computation is asked to deliver, plus the
/// guard bits carried internally to absorb rounding.
struct Precision {
  long bits = 256;
  long guard = 64;

  long working() const { return bits + guard; }
};

// ---------------------------------------------------------------------------
// BigRational

/// Exact rational, always in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(implicit)
  BigRational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  friend BigRational operator+(const BigRational& x, const BigRational& y);
  friend BigRational operator-(const BigRational& x, const BigRational& y);
  friend BigRational operator*(const BigRational& x, const BigRational& y);
  friend BigRational operator/(const BigRational& x, const BigRational& y);
  BigRational operator-() const;

  friend bool operator==(const BigRational& x, const BigRational& y) {
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& x,
                                          const BigRational& y) {
    const int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  std::string to_string() const { return value_.get_str(); }

 private:
  explicit BigRational(mpq_class value);
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// Second Bernoulli polynomial B_2(r) = r^2 - r + 1/6, exactly.
BigRational bernoulli2(const BigRational& r);

// ---------------------------------------------------------------------------
// QuadIrrational

/// The point (p + sqrt(d)) / q of the upper half-plane, with d < 0,
/// d = 0 or 1 (mod 4) and q > 0. Equality is structural.
class QuadIrrational {
 public:
  QuadIrrational(BigInt p, BigInt q, BigInt d);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& d() const { return d_; }

  friend bool operator==(const QuadIrrational& x, const QuadIrrational& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && x.d_ == y.d_;
  }

  /// "(p+sqrt(d))/q" with the numbers written out.
  std::string to_string() const;

 private:
  BigInt p_;
  BigInt q_;
  BigInt d_;
};

std::ostream& operator<<(std::ostream& os, const QuadIrrational& x);

// ---------------------------------------------------------------------------
// BigFloat

class BigFloat {
 public:
  explicit BigFloat(long precision_bits);
  BigFloat(long value, long precision_bits);
  BigFloat(double value, long precision_bits);
  BigFloat(const BigRational& value, long precision_bits);
  BigFloat(const BigInt& value, long precision_bits);
  /// Rounds `other` to a new precision.
  BigFloat(const BigFloat& other, long precision_bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  static BigFloat pi(long precision_bits);
  static BigFloat pow2(long exponent, long precision_bits);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_negative() const { return mpfr_sgn(value_) < 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log2 |x|; -inf for zero.
  double log2_abs() const;

  /// Scientific notation with `digits` significant decimal digits, rounded
  /// half-to-even, e.g. "-1.2500e-3". Zero renders as "0".
  std::string to_decimal(long digits) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator/(const BigFloat& x, const BigFloat& y);

  friend std::partial_ordering operator<=>(const BigFloat& x,
                                           const BigFloat& y);
  friend bool operator==(const BigFloat& x, const BigFloat& y) {
    return mpfr_equal_p(x.value_, y.value_) != 0;
  }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);

// ---------------------------------------------------------------------------
// BigComplex

class BigComplex {
 public:
  explicit BigComplex(long precision_bits);
  BigComplex(BigFloat real, BigFloat imag);
  /// Rounds `other` to a new precision.
  BigComplex(const BigComplex& other, long precision_bits);

  long precision() const { return re_.precision(); }
  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }

  static BigComplex one(long precision_bits);

  BigComplex operator-() const;
  friend BigComplex operator+(const BigComplex& x, const BigComplex& y);
  friend BigComplex operator-(const BigComplex& x, const BigComplex& y);
  friend BigComplex operator*(const BigComplex& x, const BigComplex& y);
  friend BigComplex operator/(const BigComplex& x, const BigComplex& y);
  friend BigComplex operator*(const BigComplex& x, const BigRational& r);
  friend BigComplex operator+(const BigComplex& x, const BigRational& r);

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  /// "re+imi" / "re-imi" with `digits` significant digits in each part.
  std::string to_decimal(long digits) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

BigFloat abs(const BigComplex& z);
BigComplex conj(const BigComplex& z);
/// e^{2 pi i z}.
BigComplex exp_2pi_i(const BigComplex& z);
/// z^n for any integer n (n < 0 inverts; z must then be nonzero).
BigComplex pow(const BigComplex& z, long n);

/// (p + i sqrt|d|) / q at the given precision. Rejects d >= 0.
BigComplex to_complex(const QuadIrrational& x, long precision_bits);

/// Relative agreement of two values in bits: -log2(|x - y| / |y|), capped at
/// the smaller precision. Returns the cap if x == y.
double agreement_bits(const BigComplex& x, const BigComplex& y);

/// Decimal significant digits used when rendering a result of `bits`
/// precision: ceil(0.3 * bits).
long decimal_digits_for(long bits);

}  // namespace nbasis

#endif  // NBASIS_EXACTMATH_HPP
