// Explicit Shimura reciprocity data: the matrices beta_Q, the group
// W_{N,theta} / {+-1}, and the right action of GL_2(Z/N) on row vectors
// (v/N, w/N) taken modulo Z^2 and sign.
#ifndef NBASIS_RECIPROCITY_HPP
#define NBASIS_RECIPROCITY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "nbasis/quadforms.hpp"

namespace nbasis {

/// Largest supported level N. Keeps products of residues inside 64 bits.
inline constexpr std::int64_t kMaxLevel = std::int64_t{1} << 31;

/// A 2x2 integer matrix (m11, m12; m21, m22).
struct IntMatrix2 {
  std::int64_t m11 = 1;
  std::int64_t m12 = 0;
  std::int64_t m21 = 0;
  std::int64_t m22 = 1;

  std::int64_t det() const { return m11 * m22 - m12 * m21; }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m);

/// Element of GL_2(Z/N) with entries stored as least nonnegative residues.
class MatrixModN {
 public:
  /// Reduces the entries mod N. Throws InvalidArgument unless N >= 2 and the
  /// determinant is a unit mod N.
  MatrixModN(std::int64_t m11, std::int64_t m12, std::int64_t m21,
             std::int64_t m22, std::int64_t modulus);
  MatrixModN(const IntMatrix2& m, std::int64_t modulus);

  static MatrixModN identity(std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }
  const std::array<std::int64_t, 4>& entries() const { return entries_; }
  std::int64_t m11() const { return entries_[0]; }
  std::int64_t m12() const { return entries_[1]; }
  std::int64_t m21() const { return entries_[2]; }
  std::int64_t m22() const { return entries_[3]; }
  std::int64_t det() const;

  MatrixModN negated() const;
  /// Representative of the class in GL_2(Z/N)/{+-1}: the lexicographically
  /// smaller entry tuple of M and -M. Identity map for N = 2.
  MatrixModN canonical() const;
  bool is_canonical() const { return canonical() == *this; }
  /// Equality in GL_2(Z/N)/{+-1}.
  bool same_class(const MatrixModN& other) const;

  friend MatrixModN operator*(const MatrixModN& x, const MatrixModN& y);
  friend bool operator==(const MatrixModN&, const MatrixModN&) = default;

 private:
  std::array<std::int64_t, 4> entries_;
  std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const MatrixModN& m);

/// The row vector (v/N, w/N), nonzero mod Z^2, identified with its negative.
/// Stored as the lexicographically smaller of (v, w) and (-v, -w) mod N.
class FracVector {
 public:
  /// Throws InvalidArgument when (v, w) = (0, 0) mod N or N < 2.
  FracVector(std::int64_t v, std::int64_t w, std::int64_t modulus);

  std::int64_t v() const { return v_; }
  std::int64_t w() const { return w_; }
  std::int64_t modulus() const { return modulus_; }

  friend auto operator<=>(const FracVector&, const FracVector&) = default;

 private:
  std::int64_t v_;
  std::int64_t w_;
  std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const FracVector& x);

/// An element (t - B s, -C s; s, t) of W_{N,theta}/{+-1}, canonical form.
struct WElement {
  std::int64_t t = 1;
  std::int64_t s = 0;
  MatrixModN matrix = MatrixModN::identity(2);

  bool is_identity() const {
    return matrix == MatrixModN::identity(matrix.modulus());
  }
};

/// (alpha, Q): one element of Gal(K_(N)/K) under the reciprocity bijection.
struct ConjugateIndex {
  WElement alpha;
  QuadForm form;
};

/// Local component beta_p of beta_Q for the prime p. The three branches
/// are p not dividing a; p | a and p not dividing c; p | a and p | c.
IntMatrix2 beta_local(const QuadForm& q, const Discriminant& d,
                      std::int64_t p);

/// beta_Q mod N, glued from beta_local mod p^e over p^e || N by the Chinese
/// remainder theorem, in canonical form.
MatrixModN beta_modN(const QuadForm& q, const Discriminant& d, std::int64_t N);

/// W_{N,theta}/{+-1}: identity first, then ordered by (t, s) of the
/// canonical representative. Throws ExcludedField for d = -3, -4.
std::vector<WElement> w_group(const Discriminant& d, std::int64_t N);

/// (v, w) * M mod N, canonical. Throws InvalidArgument on modulus mismatch.
FracVector act_vector(const FracVector& vec, const MatrixModN& m);

/// Every (alpha, Q) with Q in reduced_forms order (outer) and alpha in
/// w_group order (inner). The first entry is the identity of the Galois
/// group.
std::vector<ConjugateIndex> conjugate_indices(const Discriminant& d,
                                              std::int64_t N);

/// Prime power factorization of n >= 1 as (p, e) pairs in increasing p.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

}  // namespace nbasis

#endif  // NBASIS_RECIPROCITY_HPP
