#include "nbasis/normal_basis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "nbasis/error.hpp"
#include "nbasis/siegel.hpp"

namespace nbasis {

namespace {

// Extra bits carried by CM points so their rounding stays below the guard.
constexpr long kPointExtraBits = 64;

// Runs body(i) for i in [0, count) on up to `threads` workers and rethrows
// the first exception.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

// (base * group_order <= 1) for base^m, rounding every step upward.
bool power_small_enough(const BigFloat& base, std::uint64_t m,
                        std::uint64_t group_order) {
  BigFloat acc(base.precision());
  mpfr_pow_ui(acc.get(), base.get(), m, MPFR_RNDU);
  mpfr_mul_ui(acc.get(), acc.get(), group_order, MPFR_RNDU);
  return mpfr_cmp_ui(acc.get(), 1) <= 0;
}

}  // namespace

std::vector<ConjugateRecord> conjugates(const Discriminant& d, std::int64_t N,
                                        const Precision& precision,
                                        unsigned threads) {
  const std::vector<ConjugateIndex> indices = conjugate_indices(d, N);
  const long point_bits = precision.working() + kPointExtraBits;

  struct FormData {
    MatrixModN beta;
    QuadIrrational point;
    BigComplex tau;
  };
  std::map<QuadForm, FormData> per_form;
  for (const QuadForm& q : reduced_forms(d)) {
    QuadIrrational point = theta_of_form(q, d);
    BigComplex tau = to_complex(point, point_bits);
    per_form.emplace(q, FormData{beta_modN(q, d, N), std::move(point),
                                 std::move(tau)});
  }

  const FracVector base(0, 1, N);
  std::vector<std::optional<ConjugateRecord>> slots(indices.size());
  parallel_for(indices.size(), threads, [&](std::size_t i) {
    const ConjugateIndex& index = indices[i];
    const FormData& data = per_form.at(index.form);
    const FracVector vec = act_vector(base, index.alpha.matrix * data.beta);
    BigComplex value = siegel_power(vec.v(), vec.w(), data.tau, N,
                                    PowerKind::kNegativeLevel, precision);
    slots[i].emplace(ConjugateRecord{index, vec, data.point, std::move(value)});
  });

  std::vector<ConjugateRecord> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

CriterionReport criterion_from_ratios(std::vector<BigFloat> ratios,
                                      std::uint64_t group_order,
                                      const BigFloat& margin) {
  if (group_order == 0) {
    throw Error(ErrorKind::kInvalidArgument, "group order must be positive");
  }
  long prec = margin.precision();
  for (const BigFloat& r : ratios) prec = std::max(prec, r.precision());

  BigFloat max_ratio(prec);
  for (const BigFloat& r : ratios) {
    if (r > max_ratio) max_ratio = BigFloat(r, prec);
  }
  BigFloat bound(prec);
  mpfr_add(bound.get(), max_ratio.get(), margin.get(), MPFR_RNDU);

  CriterionReport report{std::move(ratios), max_ratio, false, std::nullopt,
                         group_order};
  report.passes = bound < BigFloat(1L, prec);
  if (!report.passes) return report;

  if (bound.is_zero() || group_order == 1) {
    report.m = 1;
    return report;
  }
  // Estimate from logarithms, then settle on the least m exactly.
  const double estimate = std::log2(static_cast<double>(group_order)) /
                          -bound.log2_abs();
  std::uint64_t m = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(estimate)));
  while (m > 1 && power_small_enough(bound, m - 1, group_order)) --m;
  while (!power_small_enough(bound, m, group_order)) ++m;
  report.m = m;
  return report;
}

CriterionReport check_criterion(const std::vector<ConjugateRecord>& records) {
  if (records.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no conjugates to check");
  }
  const ConjugateRecord& identity = records.front();
  if (!identity.index.alpha.is_identity() || identity.index.form.a != 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "first record must be the identity conjugate");
  }
  for (const ConjugateRecord& r : records) {
    if (r.value.is_zero()) {
      std::ostringstream msg;
      msg << "conjugate at vector " << r.vector << " and point " << r.point
          << " underflowed to zero; raise the precision";
      throw Error(ErrorKind::kDegenerateValue, msg.str());
    }
  }
  const BigFloat base = abs(identity.value);
  std::vector<BigFloat> ratios;
  ratios.reserve(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    ratios.push_back(abs(records[i].value) / base);
  }
  const long prec = identity.value.precision();
  return criterion_from_ratios(std::move(ratios), records.size(),
                               BigFloat::pow2(kRatioMarginLog2, prec));
}

IntPolynomial minimal_polynomial(std::span<const BigComplex> values,
                                 double snap_tolerance) {
  long prec = 64;
  for (const BigComplex& v : values) prec = std::max(prec, v.precision());

  // coeffs[k] multiplies X^{n-k}.
  std::vector<BigComplex> coeffs{BigComplex::one(prec)};
  for (const BigComplex& v : values) {
    coeffs.push_back(BigComplex(prec));
    for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
      coeffs[k] = coeffs[k] - v * coeffs[k - 1];
    }
  }

  IntPolynomial poly;
  poly.coefficients.reserve(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const BigComplex& c = coeffs[k];
    BigFloat nearest(prec);
    mpfr_rint(nearest.get(), c.real().get(), MPFR_RNDN);
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), nearest.get(), MPFR_RNDN);
    const double rounding = abs(c.real() - nearest).to_double();
    const double imag = abs(c.imag()).to_double();
    poly.max_rounding_residual = std::max(poly.max_rounding_residual, rounding);
    poly.max_imag_residual = std::max(poly.max_imag_residual, imag);
    if (!(rounding <= snap_tolerance) || !(imag <= snap_tolerance)) {
      std::ostringstream msg;
      msg << "coefficient of X^" << coeffs.size() - 1 - k
          << " is not within " << snap_tolerance << " of an integer (distance "
          << rounding << ", imaginary part " << imag
          << "); raise the precision, or the values are not algebraic "
             "integers";
      throw Error(ErrorKind::kSnapFailure, msg.str());
    }
    poly.coefficients.push_back(std::move(z));
  }
  return poly;
}

IntPolynomial minimal_polynomial(const std::vector<ConjugateRecord>& records,
                                 double snap_tolerance) {
  std::vector<BigComplex> values;
  values.reserve(records.size());
  for (const ConjugateRecord& r : records) values.push_back(r.value);
  return minimal_polynomial(values, snap_tolerance);
}

std::vector<BigComplex> power_values(const std::vector<ConjugateRecord>& records,
                                     std::uint64_t m) {
  std::vector<BigComplex> out;
  out.reserve(records.size());
  for (const ConjugateRecord& r : records) {
    out.push_back(pow(r.value, static_cast<long>(m)));
  }
  return out;
}

BigComplex siegel_ramachandra_invariant(const Discriminant& d, std::int64_t N,
                                        const Precision& precision) {
  const BigComplex tau =
      to_complex(theta(d), precision.working() + kPointExtraBits);
  return siegel_power(0, 1, tau, N, PowerKind::kRamachandra, precision);
}

}  // namespace nbasis
