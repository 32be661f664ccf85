// Siegel functions
//
//   g_(r1,r2)(tau) = -q^{B_2(r1)/2} e^{pi i r2 (r1 - 1)} (1 - q_z)
//                    * prod_{n >= 1} (1 - q^n q_z)(1 - q^n / q_z),
//
// q = e^{2 pi i tau}, q_z = e^{2 pi i z}, z = r1 tau + r2, evaluated from a
// truncated product with an explicit tail bound, and the integer powers of
// them that are invariant under (r1, r2) -> +-(r1, r2) + Z^2.
#ifndef NBASIS_SIEGEL_HPP
#define NBASIS_SIEGEL_HPP

#include <cstddef>
#include <cstdint>

#include "nbasis/exactmath.hpp"

namespace nbasis {

inline constexpr std::size_t kDefaultMaxFactors = 1'000'000;

struct SiegelParams {
  BigRational r1;
  BigRational r2;
  BigComplex tau;
  Precision precision;
  std::size_t max_factors = kDefaultMaxFactors;
};

/// Number of product factors n = 1..M used for a given tau and precision:
/// starts at ceil((bits + guard) ln 2 / (2 pi Im tau)) + 2 and grows until
/// the tail bound 4|q|^M / (1 - |q|)^2 of the log-product is at most
/// 2^-(bits + guard). Throws PrecisionUnachievable above `max_factors`.
std::size_t truncation_index(double imag_tau, const Precision& precision,
                             std::size_t max_factors = kDefaultMaxFactors);

/// g_(r1,r2)(tau) with 0 <= r1, r2 < 1 not both zero and Im tau > 0.
/// The result carries precision.working() bits and is accurate to at least
/// precision.bits bits relative.
BigComplex siegel_g(const SiegelParams& params);

enum class PowerKind {
  kNegativeLevel,  // exponent -12N/gcd(6,N)
  kPositiveLevel,  // exponent +12N/gcd(6,N)
  kRamachandra,    // exponent 12N
};

std::int64_t power_exponent(PowerKind kind, std::int64_t N);

/// g_(v/N, w/N)(tau)^e for the exponent selected by `kind`. (v, w) are
/// reduced into [0, N)^2 first; the value only depends on the class of
/// +-(v/N, w/N) mod Z^2. Throws InvalidArgument for (v, w) = 0 mod N.
BigComplex siegel_power(std::int64_t v, std::int64_t w, const BigComplex& tau,
                        std::int64_t N, PowerKind kind,
                        const Precision& precision,
                        std::size_t max_factors = kDefaultMaxFactors);

}  // namespace nbasis

#endif  // NBASIS_SIEGEL_HPP
