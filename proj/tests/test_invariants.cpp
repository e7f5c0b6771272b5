#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "spnalg/invariants.hpp"
#include "spnalg/weyl_subgroup.hpp"

using namespace spnalg;

namespace {

// partitions of k into at most n parts, by the textbook recurrence;
// independent of the library's orbit machinery
long long partitions_at_most(int k, int n)
{
  if (k == 0)
    return 1;
  if (n == 0)
    return 0;
  return partitions_at_most(k, n - 1) +
         (k >= n ? partitions_at_most(k - n, n) : 0);
}

WeylSubgroup diagonal_swap_group()
{
  return WeylSubgroup::generated_by(2,
                                    {SignedPerm::transposition(2, 0, 1, false)});
}

WeylSubgroup sign_flips_only(int n)
{
  std::vector<SignedPerm> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(SignedPerm::sign_flip(n, i));
  return WeylSubgroup::generated_by(n, gens);
}

} // namespace

TEST_CASE("rational arithmetic")
{
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK((Rational(3) / Rational(2)) == Rational(3, 2));
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(INT64_MAX),
                  std::overflow_error);
}

TEST_CASE("power series arithmetic")
{
  const int d = 8;

  // geometric series times (1 - q) is 1
  PowerSeries geo = PowerSeries::one(d).times_inverse_linear(1, 1);
  for (int i = 0; i <= d; ++i)
    CHECK(geo.coef(i) == Rational(1));
  PowerSeries one_minus_q(d);
  one_minus_q.set_coef(0, Rational(1));
  one_minus_q.set_coef(1, Rational(-1));
  CHECK(geo * one_minus_q == PowerSeries::one(d));

  // alternating series times (1 + q) is 1
  PowerSeries alt = PowerSeries::one(d).times_inverse_linear(1, -1);
  for (int i = 0; i <= d; ++i)
    CHECK(alt.coef(i) == Rational(i % 2 ? -1 : 1));
  PowerSeries one_plus_q(d);
  one_plus_q.set_coef(0, Rational(1));
  one_plus_q.set_coef(1, Rational(1));
  CHECK(alt * one_plus_q == PowerSeries::one(d));

  // sums, scaling, integer extraction
  CHECK((geo + alt).scaled(Rational(1, 2)) ==
        PowerSeries::one(d).times_inverse_linear(2, 1));
  CHECK_THROWS_AS(geo + PowerSeries::one(d + 1), std::invalid_argument);
  CHECK_THROWS_AS(geo.scaled(Rational(1, 2)).integer_coefficients(),
                  std::domain_error);

  std::vector<long long> coefs = geo.integer_coefficients();
  CHECK(coefs == std::vector<long long>(d + 1, 1));
}

TEST_CASE("power series print format")
{
  PowerSeries s = PowerSeries::one(4).times_inverse_linear(2, 1);
  CHECK(s.str() == "1 + 0·q + 1·q² + 0·q³ "
                   "+ 1·q⁴");

  PowerSeries halves = PowerSeries::one(1).scaled(Rational(1, 2));
  CHECK(halves.str() == "1/2 + 0·q");

  PowerSeries big = PowerSeries::one(12);
  CHECK(big.str().find("q¹⁰") != std::string::npos);
}

TEST_CASE("molien series of small reflection groups")
{
  const int d = 8;

  SECTION("rank one")
  {
    PowerSeries full1 = molien(WeylSubgroup::full(1), d);
    for (int i = 0; i <= d; ++i)
      CHECK(full1.coef(i) == Rational(i % 2 == 0 ? 1 : 0));

    PowerSeries triv = molien(WeylSubgroup::trivial(1), d);
    for (int i = 0; i <= d; ++i)
      CHECK(triv.coef(i) == Rational(1));
  }

  SECTION("rank two")
  {
    PowerSeries full2 = molien(WeylSubgroup::full(2), d);
    PowerSeries expected =
        PowerSeries::one(d).times_inverse_linear(2, 1).times_inverse_linear(4,
                                                                            1);
    CHECK(full2 == expected);
    CHECK(full2.coef(4) == Rational(2));
  }

  SECTION("the plain swap subgroup counts symmetric polynomials")
  {
    PowerSeries sym = molien(diagonal_swap_group(), d);
    for (int i = 0; i <= d; ++i)
      CHECK(sym.coef(i) == Rational(i / 2 + 1));
  }

  SECTION("the sign-flip subgroup counts even monomials")
  {
    PowerSeries evens = molien(sign_flips_only(2), d);
    for (int i = 0; i <= d; ++i)
      CHECK(evens.coef(i) == Rational(i % 2 == 0 ? i / 2 + 1 : 0));
  }

  SECTION("coefficients are nonnegative integers for every subgroup")
  {
    for (const auto &h :
         {WeylSubgroup::full(3), sign_flips_only(3), WeylSubgroup::trivial(2)}) {
      auto coefs = molien(h, 10).integer_coefficients();
      for (long long c : coefs)
        CHECK(c >= 0);
    }
  }
}

TEST_CASE("molien series match the closed-form target")
{
  for (int n = 1; n <= 4; ++n) {
    PowerSeries m = molien(WeylSubgroup::full(n), 16);
    CHECK(m == target_series(n, 16));
  }
}

TEST_CASE("target series examples")
{
  PowerSeries t1 = target_series(1, 6);
  for (int i = 0; i <= 6; ++i)
    CHECK(t1.coef(i) == Rational(i % 2 == 0 ? 1 : 0));

  CHECK(target_series(2, 8).coef(4) == Rational(2));
  CHECK(target_series(3, 8).coef(0) == Rational(1));

  PowerSeries direct = PowerSeries::one(10)
                           .times_inverse_linear(2, 1)
                           .times_inverse_linear(4, 1)
                           .times_inverse_linear(6, 1);
  CHECK(target_series(3, 10) == direct);
}

TEST_CASE("the Reynolds oracle agrees with the Molien series")
{
  auto check_agreement = [](const WeylSubgroup &h, int d) {
    std::vector<int> direct = invariant_dims_direct(h, d);
    std::vector<long long> series = molien(h, d).integer_coefficients();
    REQUIRE(direct.size() == series.size());
    for (std::size_t i = 0; i < direct.size(); ++i)
      CHECK(direct[i] == series[i]);
  };

  check_agreement(WeylSubgroup::full(1), 10);
  check_agreement(WeylSubgroup::full(2), 10);
  check_agreement(WeylSubgroup::full(3), 6);
  check_agreement(WeylSubgroup::trivial(1), 10);
  check_agreement(WeylSubgroup::trivial(2), 6);
  check_agreement(diagonal_swap_group(), 8);
  check_agreement(sign_flips_only(2), 8);
  check_agreement(sign_flips_only(3), 6);

  SECTION("documented values")
  {
    std::vector<int> d1 = invariant_dims_direct(WeylSubgroup::full(1), 2);
    CHECK(d1[0] == 1); // constants
    CHECK(d1[2] == 1); // t^2
    std::vector<int> d2 = invariant_dims_direct(WeylSubgroup::full(2), 2);
    CHECK(d2[2] == 1); // t1^2 + t2^2
  }

  SECTION("scale caps")
  {
    CHECK_THROWS_AS(invariant_dims_direct(WeylSubgroup::trivial(4), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(invariant_dims_direct(WeylSubgroup::full(1), 13),
                    std::invalid_argument);
  }
}

TEST_CASE("symmetric invariants over F_2")
{
  SECTION("equality with the product generating function")
  {
    for (int n = 1; n <= 3; ++n) {
      std::vector<int> dims = f2_invariant_dims(n, 24);
      std::vector<long long> series =
          cohomological_target_series(n, 24).integer_coefficients();
      REQUIRE(dims.size() == series.size());
      for (std::size_t i = 0; i < dims.size(); ++i)
        CHECK(dims[i] == series[i]);
    }
  }

  SECTION("documented values")
  {
    std::vector<int> d2 = f2_invariant_dims(2, 8);
    CHECK(d2[0] == 1);
    CHECK(d2[8] == 2); // sigma_1^2 and sigma_2
    std::vector<int> d3 = f2_invariant_dims(3, 4);
    CHECK(d3[4] == 1); // sigma_1 = q_1 + q_2 + q_3
  }

  SECTION("degrees off the 4-grading vanish")
  {
    std::vector<int> dims = f2_invariant_dims(2, 11);
    for (int deg = 0; deg <= 11; ++deg)
      if (deg % 4 != 0)
        CHECK(dims[deg] == 0);
  }

  SECTION("row reduction reproduces the orbit count")
  {
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> dims = f2_invariant_dims(n, 32);
      for (int k = 0; 4 * k <= 32; ++k)
        CHECK(dims[4 * k] == partitions_at_most(k, n));
    }
  }

  SECTION("scale caps")
  {
    CHECK_THROWS_AS(f2_invariant_dims(5, 8), std::invalid_argument);
    CHECK_THROWS_AS(f2_invariant_dims(2, 33), std::invalid_argument);
  }
}
