#include "nbasis/reciprocity.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "nbasis/error.hpp"

namespace nbasis {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

void check_level(std::int64_t N) {
  if (N < 2 || N >= kMaxLevel) {
    throw Error(ErrorKind::kInvalidArgument,
                "level N must be in [2, 2^31), got " + std::to_string(N));
  }
}

// Inverse of x modulo n; x must be a unit.
std::int64_t inverse_mod(std::int64_t x, std::int64_t n) {
  std::int64_t r0 = n, r1 = mod(x, n);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return mod(s0, n);
}

std::int64_t int_pow(std::int64_t base, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// ---------------------------------------------------------------------------

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) {
  return os << "(" << m.m11 << "," << m.m12 << ";" << m.m21 << "," << m.m22
            << ")";
}

MatrixModN::MatrixModN(std::int64_t m11, std::int64_t m12, std::int64_t m21,
                       std::int64_t m22, std::int64_t modulus)
    : entries_{0, 0, 0, 0}, modulus_(modulus) {
  check_level(modulus);
  entries_ = {mod(m11, modulus), mod(m12, modulus), mod(m21, modulus),
              mod(m22, modulus)};
  if (std::gcd(det(), modulus) != 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "matrix is not invertible mod " + std::to_string(modulus));
  }
}

MatrixModN::MatrixModN(const IntMatrix2& m, std::int64_t modulus)
    : MatrixModN(m.m11, m.m12, m.m21, m.m22, modulus) {}

MatrixModN MatrixModN::identity(std::int64_t modulus) {
  return MatrixModN(1, 0, 0, 1, modulus);
}

std::int64_t MatrixModN::det() const {
  return mod(entries_[0] * entries_[3] - entries_[1] * entries_[2], modulus_);
}

MatrixModN MatrixModN::negated() const {
  return MatrixModN(-entries_[0], -entries_[1], -entries_[2], -entries_[3],
                    modulus_);
}

MatrixModN MatrixModN::canonical() const {
  const MatrixModN neg = negated();
  return neg.entries_ < entries_ ? neg : *this;
}

bool MatrixModN::same_class(const MatrixModN& other) const {
  return canonical() == other.canonical();
}

MatrixModN operator*(const MatrixModN& x, const MatrixModN& y) {
  if (x.modulus_ != y.modulus_) {
    throw Error(ErrorKind::kInvalidArgument, "matrix modulus mismatch");
  }
  const std::int64_t n = x.modulus_;
  const auto& a = x.entries_;
  const auto& b = y.entries_;
  return MatrixModN(mod(a[0] * b[0] + a[1] * b[2], n),
                    mod(a[0] * b[1] + a[1] * b[3], n),
                    mod(a[2] * b[0] + a[3] * b[2], n),
                    mod(a[2] * b[1] + a[3] * b[3], n), n);
}

std::ostream& operator<<(std::ostream& os, const MatrixModN& m) {
  return os << "(" << m.m11() << "," << m.m12() << ";" << m.m21() << ","
            << m.m22() << ") mod " << m.modulus();
}

// ---------------------------------------------------------------------------

FracVector::FracVector(std::int64_t v, std::int64_t w, std::int64_t modulus)
    : v_(0), w_(0), modulus_(modulus) {
  check_level(modulus);
  v_ = mod(v, modulus);
  w_ = mod(w, modulus);
  if (v_ == 0 && w_ == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "vector must be nonzero mod " + std::to_string(modulus));
  }
  const std::int64_t nv = mod(-v_, modulus);
  const std::int64_t nw = mod(-w_, modulus);
  if (std::tie(nv, nw) < std::tie(v_, w_)) {
    v_ = nv;
    w_ = nw;
  }
}

std::ostream& operator<<(std::ostream& os, const FracVector& x) {
  return os << "(" << x.v() << "," << x.w() << ")/" << x.modulus();
}

FracVector act_vector(const FracVector& vec, const MatrixModN& m) {
  if (vec.modulus() != m.modulus()) {
    throw Error(ErrorKind::kInvalidArgument, "vector/matrix modulus mismatch");
  }
  const std::int64_t n = m.modulus();
  return FracVector(mod(vec.v() * m.m11() + vec.w() * m.m21(), n),
                    mod(vec.v() * m.m12() + vec.w() * m.m22(), n), n);
}

// ---------------------------------------------------------------------------

IntMatrix2 beta_local(const QuadForm& q, const Discriminant& d,
                      std::int64_t p) {
  if (p < 2) {
    throw Error(ErrorKind::kInvalidArgument, "beta_local needs a prime p");
  }
  const std::int64_t a = q.a;
  const std::int64_t b = q.b;
  const std::int64_t c = q.c;
  if (d.is_even()) {
    // b is even because b^2 = d + 4ac = 0 (mod 4).
    const std::int64_t h = b / 2;
    if (a % p != 0) return {a, h, 0, 1};
    if (c % p != 0) return {-h, -c, 1, 0};
    return {-a - h, -c - h, 1, -1};
  }
  // b is odd because b^2 = d = 1 (mod 4).
  const std::int64_t lo = (b - 1) / 2;
  const std::int64_t hi = (b + 1) / 2;
  if (a % p != 0) return {a, lo, 0, 1};
  if (c % p != 0) return {-hi, -c, 1, 0};
  return {-a - hi, -c - lo, 1, -1};
}

MatrixModN beta_modN(const QuadForm& q, const Discriminant& d,
                     std::int64_t N) {
  check_level(N);
  // Running CRT solution modulo `glued`.
  std::array<std::int64_t, 4> acc{0, 0, 0, 0};
  std::int64_t glued = 1;
  for (const auto& [p, e] : factorize(N)) {
    const std::int64_t pe = int_pow(p, e);
    const IntMatrix2 local = beta_local(q, d, p);
    const std::array<std::int64_t, 4> r{mod(local.m11, pe), mod(local.m12, pe),
                                        mod(local.m21, pe), mod(local.m22, pe)};
    const std::int64_t inv = inverse_mod(glued, pe);
    for (std::size_t i = 0; i < 4; ++i) {
      const std::int64_t k = mod((r[i] - acc[i]) % pe * inv, pe);
      acc[i] += glued * k;
    }
    glued *= pe;
  }
  return MatrixModN(acc[0], acc[1], acc[2], acc[3], N).canonical();
}

std::vector<WElement> w_group(const Discriminant& d, std::int64_t N) {
  check_level(N);
  if (d.value() == -3 || d.value() == -4) {
    throw Error(ErrorKind::kExcludedField,
                "d = " + std::to_string(d.value()) +
                    " has extra units; W/{+-1} does not index the Galois group");
  }
  const ThetaPoly poly = theta_min_poly(d);
  const std::int64_t B = mod(poly.B, N);
  const std::int64_t C = mod(poly.C, N);

  std::vector<WElement> out;
  for (std::int64_t t = 0; t < N; ++t) {
    for (std::int64_t s = 0; s < N; ++s) {
      const std::int64_t det = mod(t * t - mod(B * s, N) * t + C * s % N * s, N);
      if (std::gcd(det, N) != 1) continue;
      const MatrixModN m(t - B * s, -C * s, s, t, N);
      const MatrixModN canon = m.canonical();
      if (!(canon == m)) continue;  // visit each class through its canonical rep
      out.push_back({canon.m22(), canon.m21(), canon});
    }
  }
  std::sort(out.begin(), out.end(), [](const WElement& x, const WElement& y) {
    if (x.is_identity() != y.is_identity()) return x.is_identity();
    return std::tie(x.t, x.s) < std::tie(y.t, y.s);
  });
  return out;
}

std::vector<ConjugateIndex> conjugate_indices(const Discriminant& d,
                                              std::int64_t N) {
  const std::vector<WElement> group = w_group(d, N);
  std::vector<ConjugateIndex> out;
  for (const QuadForm& q : reduced_forms(d)) {
    for (const WElement& alpha : group) out.push_back({alpha, q});
  }
  return out;
}

}  // namespace nbasis
