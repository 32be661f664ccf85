#include "nbasis/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "nbasis/error.hpp"

namespace nbasis {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNotNegative: return "NotNegative";
    case ErrorKind::kNotCongruent: return "NotCongruent";
    case ErrorKind::kNotFundamental: return "NotFundamental";
    case ErrorKind::kExcludedField: return "ExcludedField";
    case ErrorKind::kPrecisionUnachievable: return "PrecisionUnachievable";
    case ErrorKind::kDegenerateValue: return "DegenerateValue";
    case ErrorKind::kSnapFailure: return "SnapFailure";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// BigRational

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::kInvalidArgument, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

BigRational operator+(const BigRational& x, const BigRational& y) {
  return BigRational(mpq_class(x.value_ + y.value_));
}
BigRational operator-(const BigRational& x, const BigRational& y) {
  return BigRational(mpq_class(x.value_ - y.value_));
}
BigRational operator*(const BigRational& x, const BigRational& y) {
  return BigRational(mpq_class(x.value_ * y.value_));
}
BigRational operator/(const BigRational& x, const BigRational& y) {
  if (y.value_ == 0) {
    throw Error(ErrorKind::kInvalidArgument, "rational division by zero");
  }
  return BigRational(mpq_class(x.value_ / y.value_));
}
BigRational BigRational::operator-() const {
  return BigRational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
  return os << r.to_string();
}

BigRational bernoulli2(const BigRational& r) {
  return r * r - r + BigRational(1, 6);
}

// ---------------------------------------------------------------------------
// QuadIrrational

QuadIrrational::QuadIrrational(BigInt p, BigInt q, BigInt d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (d_ >= 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "quadratic irrational needs a negative radicand, got " +
                    d_.get_str());
  }
  const BigInt r = d_ % 4;  // truncating: r in (-4, 0]
  if (r != 0 && r != -3) {
    throw Error(ErrorKind::kInvalidArgument,
                "radicand must be 0 or 1 mod 4, got " + d_.get_str());
  }
  if (q_ <= 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "quadratic irrational needs a positive denominator");
  }
}

std::string QuadIrrational::to_string() const {
  return "(" + p_.get_str() + "+sqrt(" + d_.get_str() + "))/" + q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const QuadIrrational& x) {
  return os << x.to_string();
}

// ---------------------------------------------------------------------------
// BigFloat

namespace {

void check_precision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw Error(ErrorKind::kInvalidArgument,
                "unsupported precision " + std::to_string(bits));
  }
}

long max_prec(const BigFloat& x, const BigFloat& y) {
  return std::max(x.precision(), y.precision());
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  check_precision(precision_bits);
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, long precision_bits) : BigFloat(precision_bits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, long precision_bits)
    : BigFloat(precision_bits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, long precision_bits)
    : BigFloat(precision_bits) {
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, long precision_bits)
    : BigFloat(precision_bits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other, long precision_bits)
    : BigFloat(precision_bits) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(long precision_bits) {
  BigFloat r(precision_bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long exponent, long precision_bits) {
  BigFloat r(1L, precision_bits);
  mpfr_mul_2si(r.value_, r.value_, exponent, MPFR_RNDN);
  return r;
}

double BigFloat::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  const double mantissa = mpfr_get_d_2exp(&exponent, value_, MPFR_RNDN);
  return std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
}

std::string BigFloat::to_decimal(long digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return is_negative() ? "-inf" : "inf";
  if (is_zero()) return "0";
  digits = std::max(digits, 1L);
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(digits),
                           value_, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);

  std::string out;
  if (mantissa.front() == '-') {
    out.push_back('-');
    mantissa.erase(0, 1);
  }
  out.push_back(mantissa.front());
  if (mantissa.size() > 1) {
    out.push_back('.');
    out.append(mantissa, 1, std::string::npos);
  }
  out += "e" + std::to_string(static_cast<long>(exponent) - 1);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& x, const BigFloat& y) {
  BigFloat r(max_prec(x, y));
  mpfr_add(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& x, const BigFloat& y) {
  BigFloat r(max_prec(x, y));
  mpfr_sub(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& x, const BigFloat& y) {
  BigFloat r(max_prec(x, y));
  mpfr_mul(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& x, const BigFloat& y) {
  BigFloat r(max_prec(x, y));
  mpfr_div(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& x, const BigFloat& y) {
  if (mpfr_unordered_p(x.value_, y.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(x.value_, y.value_);
  return c < 0 ? std::partial_ordering::less
         : c > 0 ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// BigComplex

BigComplex::BigComplex(long precision_bits)
    : re_(precision_bits), im_(precision_bits) {}

BigComplex::BigComplex(BigFloat real, BigFloat imag)
    : re_(std::move(real)), im_(std::move(imag)) {
  if (re_.precision() != im_.precision()) {
    const long p = std::max(re_.precision(), im_.precision());
    re_ = BigFloat(re_, p);
    im_ = BigFloat(im_, p);
  }
}

BigComplex::BigComplex(const BigComplex& other, long precision_bits)
    : re_(other.re_, precision_bits), im_(other.im_, precision_bits) {}

BigComplex BigComplex::one(long precision_bits) {
  return BigComplex(BigFloat(1L, precision_bits), BigFloat(precision_bits));
}

BigComplex BigComplex::operator-() const { return BigComplex(-re_, -im_); }

BigComplex operator+(const BigComplex& x, const BigComplex& y) {
  return BigComplex(x.re_ + y.re_, x.im_ + y.im_);
}

BigComplex operator-(const BigComplex& x, const BigComplex& y) {
  return BigComplex(x.re_ - y.re_, x.im_ - y.im_);
}

BigComplex operator*(const BigComplex& x, const BigComplex& y) {
  const long p = std::max(x.precision(), y.precision());
  BigFloat re(p);
  BigFloat im(p);
  // re = a c - b d, im = a d + b c, each with a single final rounding.
  mpfr_fmms(re.get(), x.re_.get(), y.re_.get(), x.im_.get(), y.im_.get(),
            MPFR_RNDN);
  mpfr_fmma(im.get(), x.re_.get(), y.im_.get(), x.im_.get(), y.re_.get(),
            MPFR_RNDN);
  return BigComplex(std::move(re), std::move(im));
}

BigComplex operator/(const BigComplex& x, const BigComplex& y) {
  if (y.is_zero()) {
    throw Error(ErrorKind::kDegenerateValue, "complex division by zero");
  }
  const long p = std::max(x.precision(), y.precision()) + 8;
  BigFloat denom(p);
  mpfr_fmma(denom.get(), y.re_.get(), y.re_.get(), y.im_.get(), y.im_.get(),
            MPFR_RNDN);
  BigFloat re(p);
  BigFloat im(p);
  mpfr_fmma(re.get(), x.re_.get(), y.re_.get(), x.im_.get(), y.im_.get(),
            MPFR_RNDN);
  mpfr_fmms(im.get(), x.im_.get(), y.re_.get(), x.re_.get(), y.im_.get(),
            MPFR_RNDN);
  const long out = p - 8;
  return BigComplex(BigFloat(re / denom, out), BigFloat(im / denom, out));
}

BigComplex operator*(const BigComplex& x, const BigRational& r) {
  const BigFloat f(r, x.precision());
  return BigComplex(x.re_ * f, x.im_ * f);
}

BigComplex operator+(const BigComplex& x, const BigRational& r) {
  return BigComplex(x.re_ + BigFloat(r, x.precision()), x.im_);
}

std::string BigComplex::to_decimal(long digits) const {
  std::string re = re_.to_decimal(digits);
  std::string im = im_.to_decimal(digits);
  if (im.front() == '-') return re + im + "i";
  return re + "+" + im + "i";
}

BigFloat abs(const BigComplex& z) {
  BigFloat r(z.precision());
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

BigComplex conj(const BigComplex& z) { return BigComplex(z.real(), -z.imag()); }

BigComplex exp_2pi_i(const BigComplex& z) {
  // e^{2 pi i (x + i y)} = e^{-2 pi y} (cos 2 pi x + i sin 2 pi x)
  const long p = z.precision();
  const BigFloat two_pi = BigFloat::pi(p) * BigFloat(2L, p);
  const BigFloat modulus = exp(-(two_pi * z.imag()));
  const BigFloat angle = two_pi * z.real();
  BigFloat s(p);
  BigFloat c(p);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return BigComplex(modulus * c, modulus * s);
}

BigComplex pow(const BigComplex& z, long n) {
  const long p = z.precision();
  if (n < 0) {
    if (z.is_zero()) {
      throw Error(ErrorKind::kDegenerateValue, "negative power of zero");
    }
    return BigComplex::one(p) / pow(z, -n);
  }
  BigComplex result = BigComplex::one(p);
  BigComplex base = z;
  auto e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

BigComplex to_complex(const QuadIrrational& x, long precision_bits) {
  if (x.d() >= 0) {
    throw Error(ErrorKind::kInvalidArgument, "to_complex needs d < 0");
  }
  const BigFloat q(x.q(), precision_bits);
  BigFloat root(BigInt(-x.d()), precision_bits);
  root = sqrt(root);
  return BigComplex(BigFloat(BigRational(x.p(), x.q()), precision_bits),
                    root / q);
}

double agreement_bits(const BigComplex& x, const BigComplex& y) {
  const double cap =
      static_cast<double>(std::min(x.precision(), y.precision()));
  const BigFloat diff = abs(x - y);
  if (diff.is_zero()) return cap;
  const BigFloat scale = abs(y);
  if (scale.is_zero()) return -diff.log2_abs();
  return std::min(cap, scale.log2_abs() - diff.log2_abs());
}

long decimal_digits_for(long bits) { return (3 * bits + 9) / 10; }

}  // namespace nbasis
