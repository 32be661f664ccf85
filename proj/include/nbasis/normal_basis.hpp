// Conjugates of x = g_(0,1/N)(theta)^{-12N/gcd(6,N)} over K, the numerical
// certificate that some power x^m generates a normal basis of K_(N)/K, and
// the integer minimal polynomial of x.
#ifndef NBASIS_NORMAL_BASIS_HPP
#define NBASIS_NORMAL_BASIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nbasis/exactmath.hpp"
#include "nbasis/quadforms.hpp"
#include "nbasis/reciprocity.hpp"

namespace nbasis {

inline constexpr double kDefaultSnapTolerance = 1e-10;
/// Added to every computed ratio before it is compared against 1 or 1/#G.
inline constexpr long kRatioMarginLog2 = -64;

struct ConjugateRecord {
  ConjugateIndex index;
  FracVector vector;     // (0, 1/N) * alpha * beta_Q
  QuadIrrational point;  // theta_Q
  BigComplex value;
};

/// One record per conjugate_indices() entry, same order. Evaluations run on
/// up to `threads` worker threads (0 = hardware concurrency); the output
/// order does not depend on it.
std::vector<ConjugateRecord> conjugates(const Discriminant& d, std::int64_t N,
                                        const Precision& precision,
                                        unsigned threads = 1);

struct CriterionReport {
  std::vector<BigFloat> ratios;  // |x^gamma / x| for gamma != id, index order
  BigFloat max_ratio;            // 0 when there is no nontrivial conjugate
  bool passes = false;           // max_ratio + margin < 1
  std::optional<std::uint64_t> m;  // least m with (max_ratio + margin)^m <= 1/#G
  std::uint64_t group_order = 0;
};

/// Checks |x^gamma / x| < 1 for all gamma != id. The identity record must be
/// first (identity alpha, principal form); every value must be nonzero.
CriterionReport check_criterion(const std::vector<ConjugateRecord>& records);

/// The criterion on precomputed ratios. `margin` is added to the largest
/// ratio before both comparisons; use 0 for exactly known ratios.
CriterionReport criterion_from_ratios(std::vector<BigFloat> ratios,
                                      std::uint64_t group_order,
                                      const BigFloat& margin);

struct IntPolynomial {
  std::vector<BigInt> coefficients;  // degree-descending, leading 1
  double max_rounding_residual = 0.0;
  double max_imag_residual = 0.0;

  std::size_t degree() const {
    return coefficients.empty() ? 0 : coefficients.size() - 1;
  }
};

/// Expands prod (X - v_i) and rounds each coefficient to the nearest integer.
/// Throws SnapFailure if a real part is farther than `snap_tolerance` from an
/// integer or an imaginary part exceeds it.
IntPolynomial minimal_polynomial(std::span<const BigComplex> values,
                                 double snap_tolerance = kDefaultSnapTolerance);
IntPolynomial minimal_polynomial(const std::vector<ConjugateRecord>& records,
                                 double snap_tolerance = kDefaultSnapTolerance);

/// The values of the records raised to the m-th power.
std::vector<BigComplex> power_values(const std::vector<ConjugateRecord>& records,
                                     std::uint64_t m);

/// g_(0,1/N)(theta)^{12N}, the Siegel-Ramachandra invariant of the unit
/// class for the modulus N O_K.
BigComplex siegel_ramachandra_invariant(const Discriminant& d, std::int64_t N,
                                        const Precision& precision);

}  // namespace nbasis

#endif  // NBASIS_NORMAL_BASIS_HPP
