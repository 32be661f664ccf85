#include "nbasis/siegel.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "nbasis/error.hpp"

namespace nbasis {

namespace {

long bit_length(std::uint64_t x) {
  long n = 0;
  while (x != 0) {
    ++n;
    x >>= 1;
  }
  return n;
}

void check_params(const SiegelParams& params) {
  const BigRational zero(0);
  const BigRational one(1);
  if (params.r1 < zero || params.r1 >= one || params.r2 < zero ||
      params.r2 >= one) {
    throw Error(ErrorKind::kInvalidArgument,
                "Siegel parameters must lie in [0,1), got (" +
                    params.r1.to_string() + ", " + params.r2.to_string() + ")");
  }
  if (params.r1 == zero && params.r2 == zero) {
    throw Error(ErrorKind::kInvalidArgument,
                "Siegel parameters must not both vanish");
  }
  if (params.tau.imag().is_zero() || params.tau.imag().is_negative()) {
    throw Error(ErrorKind::kInvalidArgument,
                "tau must lie in the upper half-plane");
  }
  if (params.precision.bits < 2 || params.precision.guard < 0) {
    throw Error(ErrorKind::kInvalidArgument, "invalid precision");
  }
}

}  // namespace

std::size_t truncation_index(double imag_tau, const Precision& precision,
                             std::size_t max_factors) {
  if (!(imag_tau > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "tau must lie in the upper half-plane");
  }
  const double target = static_cast<double>(precision.working());
  const double two_pi_y = 2.0 * M_PI * imag_tau;
  const double log2_q = -two_pi_y / M_LN2;  // log2 |q| < 0
  const double one_minus_q = -std::expm1(-two_pi_y);

  const double start = std::ceil(target * M_LN2 / two_pi_y) + 2.0;
  // 4 |q|^M / (1 - |q|)^2 <= 2^-target  <=>  M >= (target + 2 - 2 log2(1-|q|)) / -log2|q|
  const double needed =
      std::ceil((target + 2.0 - 2.0 * std::log2(one_minus_q)) / -log2_q);
  const double m = std::max(start, needed);
  if (!std::isfinite(m) || m > static_cast<double>(max_factors)) {
    throw Error(ErrorKind::kPrecisionUnachievable,
                "Im(tau) = " + std::to_string(imag_tau) +
                    " needs more than " + std::to_string(max_factors) +
                    " product factors at " + std::to_string(precision.bits) +
                    " bits");
  }
  return static_cast<std::size_t>(m);
}

BigComplex siegel_g(const SiegelParams& params) {
  check_params(params);
  const long working = params.precision.working();
  const std::size_t terms = truncation_index(
      params.tau.imag().to_double(), params.precision, params.max_factors);
  // Each factor costs a rounding; keep log2(2M) + 8 extra bits for them.
  const long internal = working + bit_length(2 * terms) + 8;

  const BigComplex tau(params.tau, internal);
  const BigRational& r1 = params.r1;
  const BigRational& r2 = params.r2;

  // Leading factor -e^{2 pi i (tau B_2(r1)/2 + r2 (r1 - 1)/2)}, one exponential.
  const BigComplex lead_arg =
      tau * (bernoulli2(r1) * BigRational(1, 2)) +
      r2 * (r1 - BigRational(1)) * BigRational(1, 2);
  BigComplex value = -exp_2pi_i(lead_arg);

  const BigComplex one = BigComplex::one(internal);
  const BigComplex qz = exp_2pi_i(tau * r1 + r2);
  const BigComplex qz_inv = one / qz;
  const BigComplex q = exp_2pi_i(tau);

  value = value * (one - qz);
  BigComplex qn = q;
  for (std::size_t n = 1; n <= terms; ++n) {
    value = value * ((one - qn * qz) * (one - qn * qz_inv));
    qn = qn * q;
  }
  return BigComplex(value, working);
}

std::int64_t power_exponent(PowerKind kind, std::int64_t N) {
  const std::int64_t level = 12 * N / std::gcd<std::int64_t>(6, N);
  switch (kind) {
    case PowerKind::kNegativeLevel: return -level;
    case PowerKind::kPositiveLevel: return level;
    case PowerKind::kRamachandra: return 12 * N;
  }
  return 0;
}

BigComplex siegel_power(std::int64_t v, std::int64_t w, const BigComplex& tau,
                        std::int64_t N, PowerKind kind,
                        const Precision& precision, std::size_t max_factors) {
  if (N < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "level N must be at least 2, got " + std::to_string(N));
  }
  const std::int64_t rv = ((v % N) + N) % N;
  const std::int64_t rw = ((w % N) + N) % N;
  if (rv == 0 && rw == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "(v, w) must be nonzero mod " + std::to_string(N));
  }
  const std::int64_t e = power_exponent(kind, N);
  // Raising to the e-th power multiplies the relative error by |e|.
  const Precision inner{precision.bits,
                        precision.guard +
                            bit_length(static_cast<std::uint64_t>(
                                e < 0 ? -e : e)) +
                            4};
  const SiegelParams params{BigRational(rv, N), BigRational(rw, N), tau, inner,
                            max_factors};
  const BigComplex g = siegel_g(params);
  return BigComplex(pow(g, static_cast<long>(e)), precision.working());
}

}  // namespace nbasis
