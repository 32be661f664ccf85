#include <doctest.h>

#include <map>

#include "nbasis/error.hpp"
#include "nbasis/quadforms.hpp"
#include "oracles.hpp"

using namespace nbasis;

namespace {

ErrorKind kind_of(std::int64_t d) {
  try {
    validate_discriminant(d);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected validation failure for " << d);
  return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_SUITE("quadforms") {

TEST_CASE("validate_discriminant") {
  CHECK(validate_discriminant(-20).value() == -20);
  CHECK(validate_discriminant(-7).value() == -7);
  CHECK(validate_discriminant(-4).value() == -4);
  CHECK(validate_discriminant(-3).value() == -3);
  CHECK(validate_discriminant(-8).value() == -8);
  CHECK(kind_of(-12) == ErrorKind::kNotFundamental);
  CHECK(kind_of(-16) == ErrorKind::kNotFundamental);
  CHECK(kind_of(-27) == ErrorKind::kNotFundamental);
  CHECK(kind_of(-72) == ErrorKind::kNotFundamental);  // 4 * -18
  CHECK(kind_of(0) == ErrorKind::kNotNegative);
  CHECK(kind_of(5) == ErrorKind::kNotNegative);
  CHECK(kind_of(-6) == ErrorKind::kNotCongruent);
  CHECK(kind_of(-1) == ErrorKind::kNotCongruent);
}

TEST_CASE("validation agrees with the oracle") {
  for (std::int64_t d = -1; d > -2000; --d) {
    bool ok = true;
    try {
      validate_discriminant(d);
    } catch (const Error&) {
      ok = false;
    }
    CHECK_MESSAGE(ok == oracle::is_fundamental(d), "d = " << d);
  }
}

TEST_CASE("reduced_forms examples") {
  CHECK(reduced_forms(validate_discriminant(-20)) ==
        std::vector<QuadForm>{{1, 0, 5}, {2, 2, 3}});
  CHECK(reduced_forms(validate_discriminant(-7)) ==
        std::vector<QuadForm>{{1, 1, 2}});
  CHECK(reduced_forms(validate_discriminant(-23)) ==
        std::vector<QuadForm>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
}

TEST_CASE("reduced_forms properties") {
  for (std::int64_t d = -3; d > -400; --d) {
    if (!oracle::is_fundamental(d)) continue;
    const auto forms = reduced_forms(validate_discriminant(d));
    REQUIRE(!forms.empty());
    CHECK(forms.front().a == 1);
    int principal = 0;
    for (const QuadForm& q : forms) {
      CHECK(q.discriminant() == d);
      CHECK(q.is_primitive());
      CHECK(q.is_reduced());
      principal += q.a == 1;
    }
    CHECK(principal == 1);
  }
}

TEST_CASE("class numbers match a published table") {
  const std::map<std::int64_t, std::size_t> table{
      {-3, 1},  {-4, 1},  {-7, 1},  {-8, 1},  {-11, 1}, {-15, 2}, {-19, 1},
      {-20, 2}, {-23, 3}, {-24, 2}, {-31, 3}, {-35, 2}, {-39, 4}, {-40, 2},
      {-43, 1}, {-47, 5}, {-51, 2}, {-52, 2}, {-55, 4}, {-56, 4}, {-59, 3},
      {-67, 1}, {-68, 4}, {-71, 7}, {-79, 5}, {-83, 3}, {-84, 4}, {-87, 6},
      {-88, 2}, {-91, 2}, {-95, 8}, {-163, 1}};
  for (const auto& [d, h] : table) {
    CHECK_MESSAGE(reduced_forms(validate_discriminant(d)).size() == h,
                  "d = " << d);
  }
  for (std::int64_t d = -3; d > -100; --d) {
    if (!oracle::is_fundamental(d)) continue;
    CHECK_MESSAGE(table.count(d) == 1, "table misses fundamental d = " << d);
    CHECK(reduced_forms(validate_discriminant(d)).size() ==
          oracle::reduced_forms(d).size());
  }
}

TEST_CASE("theta examples") {
  CHECK(theta(validate_discriminant(-20)) == QuadIrrational(0, 2, -20));
  CHECK(theta(validate_discriminant(-7)) == QuadIrrational(-1, 2, -7));
  CHECK(theta(validate_discriminant(-8)) == QuadIrrational(0, 2, -8));
}

TEST_CASE("theta_of_form examples") {
  const Discriminant d20 = validate_discriminant(-20);
  CHECK(theta_of_form({1, 0, 5}, d20) == QuadIrrational(0, 2, -20));
  CHECK(theta_of_form({2, 2, 3}, d20) == QuadIrrational(-2, 4, -20));
  // (-2 + sqrt(-20))/4 = (-1 + sqrt(-5))/2
  const BigComplex z = to_complex(theta_of_form({2, 2, 3}, d20), 128);
  CHECK(z.real().to_double() == -0.5);
  CHECK(z.imag().to_double() == doctest::Approx(1.1180339887498949));
  CHECK(theta_of_form({1, 1, 6}, validate_discriminant(-23)) ==
        QuadIrrational(-1, 2, -23));
}

TEST_CASE("principal form's CM point is theta") {
  for (std::int64_t d = -3; d > -500; --d) {
    if (!oracle::is_fundamental(d)) continue;
    const Discriminant disc = validate_discriminant(d);
    const QuadForm principal = reduced_forms(disc).front();
    CHECK(theta_of_form(principal, disc) == theta(disc));
  }
}

TEST_CASE("theta_min_poly") {
  CHECK(theta_min_poly(validate_discriminant(-20)) == ThetaPoly{0, 5});
  CHECK(theta_min_poly(validate_discriminant(-7)) == ThetaPoly{1, 2});
  CHECK(theta_min_poly(validate_discriminant(-4)) == ThetaPoly{0, 1});
  // theta is a root: check with exact integer arithmetic on (p + sqrt d)/2.
  for (std::int64_t d = -3; d > -300; --d) {
    if (!oracle::is_fundamental(d)) continue;
    const Discriminant disc = validate_discriminant(d);
    const ThetaPoly f = theta_min_poly(disc);
    const std::int64_t p = disc.is_even() ? 0 : -1;
    // theta^2 = (p^2 + d + 2p sqrt d)/4 ; B theta = B (p + sqrt d)/2
    CHECK(p * p + d + 2 * f.B * p + 4 * f.C == 0);  // rational part
    CHECK(p + f.B == 0);  // sqrt(d) part
  }
}

}  // TEST_SUITE
