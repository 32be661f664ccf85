#include <doctest.h>

#include <random>
#include <set>

#include "nbasis/error.hpp"
#include "nbasis/reciprocity.hpp"
#include "oracles.hpp"

using namespace nbasis;

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<Discriminant> fundamental_discriminants(std::int64_t lower) {
  std::vector<Discriminant> out;
  for (std::int64_t d = -3; d > lower; --d) {
    if (oracle::is_fundamental(d)) out.push_back(validate_discriminant(d));
  }
  return out;
}

MatrixModN random_invertible(std::mt19937_64& rng, std::int64_t n) {
  std::uniform_int_distribution<std::int64_t> entry(0, n - 1);
  for (;;) {
    const std::int64_t a = entry(rng), b = entry(rng), c = entry(rng),
                       d = entry(rng);
    if (std::gcd(mod(a * d - b * c, n), n) == 1) return MatrixModN(a, b, c, d, n);
  }
}

}  // namespace

TEST_SUITE("reciprocity") {

TEST_CASE("beta_local examples") {
  const Discriminant d = validate_discriminant(-20);
  CHECK(beta_local({2, 2, 3}, d, 2) == IntMatrix2{-1, -3, 1, 0});
  CHECK(beta_local({2, 2, 3}, d, 3) == IntMatrix2{2, 1, 0, 1});
  for (std::int64_t p : {2, 3, 5, 7}) {
    CHECK(beta_local({1, 0, 5}, d, p) == IntMatrix2{1, 0, 0, 1});
  }
  // Third branch: p | a and p | c. d = -15, Q = (2, 1, 2), p = 2.
  const Discriminant d15 = validate_discriminant(-15);
  CHECK(beta_local({2, 1, 2}, d15, 2) == IntMatrix2{-3, -2, 1, -1});
  CHECK(beta_local({2, 1, 2}, d15, 2).det() == 5);
}

TEST_CASE("beta_local determinant is a, c or a+b+c and a unit mod p") {
  for (const Discriminant& d : fundamental_discriminants(-100)) {
    for (const QuadForm& q : reduced_forms(d)) {
      for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        const IntMatrix2 m = beta_local(q, d, p);
        std::int64_t expected = q.a;
        if (q.a % p == 0) expected = q.c % p != 0 ? q.c : q.a + q.b + q.c;
        CHECK(m.det() == expected);
        CHECK(mod(m.det(), p) != 0);
      }
    }
  }
}

TEST_CASE("beta_modN examples") {
  const Discriminant d = validate_discriminant(-20);
  CHECK(beta_modN({1, 0, 5}, d, 6) == MatrixModN::identity(6));

  const MatrixModN b2 = beta_modN({2, 2, 3}, d, 6);
  CHECK(b2 == MatrixModN(1, 5, 3, 2, 6));
  CHECK(b2.same_class(MatrixModN(5, 1, 3, 4, 6)));
  CHECK(MatrixModN(5, 1, 3, 4, 6).canonical() == MatrixModN(1, 5, 3, 2, 6));

  CHECK(beta_modN({2, 2, 3}, d, 2) == MatrixModN(1, 1, 1, 0, 2));
}

TEST_CASE("principal beta is +-1 and every beta is invertible") {
  for (const Discriminant& d : fundamental_discriminants(-100)) {
    const auto forms = reduced_forms(d);
    for (std::int64_t n = 2; n <= 30; ++n) {
      CHECK(beta_modN(forms.front(), d, n) == MatrixModN::identity(n));
      for (const QuadForm& q : forms) {
        const MatrixModN b = beta_modN(q, d, n);
        CHECK(std::gcd(b.det(), n) == 1);
        CHECK(b.is_canonical());
      }
    }
  }
}

TEST_CASE("beta_modN agrees with beta_local up to one global sign") {
  for (const Discriminant& d : fundamental_discriminants(-100)) {
    for (const QuadForm& q : reduced_forms(d)) {
      for (std::int64_t n = 2; n <= 60; ++n) {
        const MatrixModN b = beta_modN(q, d, n);
        bool sign_ok[2] = {true, true};
        for (const auto& [p, e] : factorize(n)) {
          const std::int64_t pe = ipow(p, e);
          const IntMatrix2 l = beta_local(q, d, p);
          const std::int64_t local[4] = {l.m11, l.m12, l.m21, l.m22};
          for (int s = 0; s < 2; ++s) {
            const std::int64_t sign = s == 0 ? 1 : -1;
            for (int i = 0; i < 4; ++i) {
              if (mod(b.entries()[i] - sign * local[i], pe) != 0) {
                sign_ok[s] = false;
              }
            }
          }
        }
        CHECK_MESSAGE((sign_ok[0] || sign_ok[1]),
                      "d=" << d.value() << " Q=" << q << " N=" << n);
      }
    }
  }
}

TEST_CASE("beta_modN does not depend on the prime order used in CRT") {
  // Reassemble by brute force: the unique residue mod N matching every
  // local component (with a common sign) must be the same class.
  const Discriminant d = validate_discriminant(-20);
  for (std::int64_t n : {6, 10, 12, 30}) {
    const MatrixModN b = beta_modN({2, 2, 3}, d, n);
    int matches = 0;
    for (std::int64_t x = 0; x < n; ++x) {
      bool ok = true;
      for (const auto& [p, e] : factorize(n)) {
        const std::int64_t pe = ipow(p, e);
        ok = ok && mod(x - beta_local({2, 2, 3}, d, p).m11, pe) == 0;
      }
      matches += ok;
      if (ok) CHECK((x == b.m11() || x == mod(-b.m11(), n)));
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("matrix canonicalization") {
  const MatrixModN m(5, 1, 3, 4, 6);
  CHECK(m.negated() == MatrixModN(1, 5, 3, 2, 6));
  CHECK(m.canonical().canonical() == m.canonical());
  CHECK(MatrixModN(1, 1, 1, 0, 2).canonical() == MatrixModN(1, 1, 1, 0, 2));
  CHECK_THROWS_AS(MatrixModN(2, 0, 0, 3, 6), Error);
  CHECK_THROWS_AS(MatrixModN(1, 0, 0, 1, 1), Error);
}

TEST_CASE("w_group examples") {
  const Discriminant d20 = validate_discriminant(-20);
  const auto w6 = w_group(d20, 6);
  REQUIRE(w6.size() == 4);
  CHECK(w6[0].matrix == MatrixModN(1, 0, 0, 1, 6));
  CHECK(w6[1].matrix == MatrixModN(0, 1, 1, 0, 6));
  CHECK(w6[2].matrix == MatrixModN(2, 3, 3, 2, 6));
  CHECK(w6[3].matrix == MatrixModN(3, 2, 2, 3, 6));
  CHECK(w6[2].t == 2);
  CHECK(w6[2].s == 3);

  const auto w2 = w_group(d20, 2);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0].matrix == MatrixModN(1, 0, 0, 1, 2));
  CHECK(w2[1].matrix == MatrixModN(0, 1, 1, 0, 2));

  const auto w7 = w_group(validate_discriminant(-7), 2);
  REQUIRE(w7.size() == 1);
  CHECK(w7[0].is_identity());
}

TEST_CASE("w_group rejects Q(i) and Q(sqrt -3)") {
  for (std::int64_t d : {-3, -4}) {
    try {
      w_group(validate_discriminant(d), 6);
      FAIL("expected ExcludedField");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kExcludedField);
    }
  }
}

TEST_CASE("w_group is the exact quotient by +-1") {
  for (const Discriminant& d : fundamental_discriminants(-60)) {
    if (d.value() == -3 || d.value() == -4) continue;
    const ThetaPoly f = theta_min_poly(d);
    for (std::int64_t n = 2; n <= 24; ++n) {
      std::size_t raw = 0;
      for (std::int64_t t = 0; t < n; ++t) {
        for (std::int64_t s = 0; s < n; ++s) {
          raw += std::gcd(mod(t * t - f.B * s * t + f.C * s * s, n), n) == 1;
        }
      }
      const auto group = w_group(d, n);
      CHECK(group.size() * (n == 2 ? 1 : 2) == raw);
      CHECK(group.front().is_identity());
      std::set<std::array<std::int64_t, 4>> seen;
      for (const WElement& w : group) {
        CHECK(w.matrix.is_canonical());
        CHECK(w.matrix == MatrixModN(w.t - f.B * w.s, -f.C * w.s, w.s, w.t, n));
        seen.insert(w.matrix.entries());
      }
      CHECK(seen.size() == group.size());
    }
  }
}

TEST_CASE("frac vectors are +- canonical") {
  CHECK(FracVector(0, 5, 6) == FracVector(0, 1, 6));
  CHECK(FracVector(5, 4, 6) == FracVector(1, 2, 6));
  CHECK(FracVector(6, 7, 6) == FracVector(0, 1, 6));
  CHECK(FracVector(-3, -2, 6) == FracVector(3, 2, 6));
  CHECK(FracVector(1, 1, 2).v() == 1);
  CHECK_THROWS_AS(FracVector(6, 12, 6), Error);
}

TEST_CASE("act_vector examples") {
  const FracVector e(0, 1, 6);
  CHECK(act_vector(e, MatrixModN(0, 1, 1, 0, 6)) == FracVector(1, 0, 6));
  CHECK(act_vector(e, MatrixModN::identity(6)) == e);
  CHECK(act_vector(e, MatrixModN(2, 3, 3, 2, 6)) == FracVector(3, 2, 6));
  CHECK_THROWS_AS(act_vector(e, MatrixModN::identity(5)), Error);
}

TEST_CASE("act_vector is a right action and never hits zero") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 11);
    std::int64_t v = 0, w = 0;
    while (mod(v, n) == 0 && mod(w, n) == 0) {
      v = static_cast<std::int64_t>(rng() % 100) - 50;
      w = static_cast<std::int64_t>(rng() % 100) - 50;
    }
    const FracVector vec(v, w, n);
    const MatrixModN m1 = random_invertible(rng, n);
    const MatrixModN m2 = random_invertible(rng, n);
    CHECK(act_vector(act_vector(vec, m1), m2) == act_vector(vec, m1 * m2));
    // Sign classes of matrices act consistently on sign classes of vectors.
    CHECK(act_vector(vec, m1.negated()) == act_vector(vec, m1));
    // Matrix product against the naive oracle.
    const auto prod = oracle::mul_mod(m1.entries(), m2.entries(), n);
    CHECK((m1 * m2).entries() == prod);
  }
}

TEST_CASE("conjugate_indices") {
  const auto i20_6 = conjugate_indices(validate_discriminant(-20), 6);
  REQUIRE(i20_6.size() == 8);
  CHECK(i20_6.front().alpha.is_identity());
  CHECK(i20_6.front().form == QuadForm{1, 0, 5});
  CHECK(i20_6[4].form == QuadForm{2, 2, 3});
  CHECK(i20_6[4].alpha.is_identity());
  CHECK(conjugate_indices(validate_discriminant(-7), 2).size() == 1);
  CHECK(conjugate_indices(validate_discriminant(-20), 2).size() == 4);
  CHECK_THROWS_AS(conjugate_indices(validate_discriminant(-4), 3), Error);
}

}  // TEST_SUITE
