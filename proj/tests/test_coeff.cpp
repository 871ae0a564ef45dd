// Tests for the coefficient ring H: symbol products against hand-expanded
// values, the torsion relation, gradings, and the scalar restrictions.
#include "doctest.h"

#include "bu2cc/coeff.hpp"

using namespace bu2cc;

TEST_CASE("burnside ring arithmetic") {
  CHECK(Coeff::g() * Coeff::g() == Coeff::g() + Coeff::g());
  CHECK(Coeff::kappa() == Coeff::integer(2) - Coeff::g());
  // kappa^2 = (2-g)^2 = 4 - 4g + 2g = 2 kappa.
  CHECK(Coeff::kappa() * Coeff::kappa() == Coeff::kappa() + Coeff::kappa());
  // 1 - kappa = g - 1 is the sign unit of the Burnside ring.
  Coeff u = Coeff::one() - Coeff::kappa();
  CHECK(u == Coeff::g() - Coeff::one());
  CHECK(u * u == Coeff::one());
  CHECK(Coeff::g().in_burnside());
  CHECK_FALSE(Coeff::e_pow(1).in_burnside());
}

TEST_CASE("positive cone and torsion") {
  CHECK(Coeff::e_pow(2) * Coeff::e_pow(3) == Coeff::e_pow(5));
  CHECK(Coeff::e_pow(1) * Coeff::xi_pow(1) == Coeff::pos_cone(1, 1));
  // 2 e^m xi^n = 0 once both exponents are positive.
  CHECK(Coeff::pos_cone(2, 1, 2).is_zero());
  CHECK((Coeff::pos_cone(1, 1) + Coeff::pos_cone(1, 1)).is_zero());
  CHECK(Coeff::pos_cone(1, 3, -1) == Coeff::pos_cone(1, 3));  // -1 = 1 mod 2
  // ... but pure powers of e and of xi are torsion-free.
  CHECK(Coeff::e_pow(2, 2) == Coeff::e_pow(2) + Coeff::e_pow(2));
  CHECK_FALSE(Coeff::xi_pow(1, 2).is_zero());
}

TEST_CASE("multiplication by g") {
  CHECK(Coeff::g() * Coeff::e_pow(1) == Coeff::zero());
  CHECK(Coeff::g() * Coeff::pos_cone(2, 1) == Coeff::zero());
  CHECK(Coeff::g() * Coeff::xi_pow(2) == Coeff::xi_pow(2, 2));
  CHECK(Coeff::g() * Coeff::neg_kappa(3) == Coeff::zero());
  CHECK(Coeff::g() * Coeff::tau(4) == Coeff::tau(4, 2));
  // kappa e = (2 - g) e = 2e.
  CHECK(Coeff::kappa() * Coeff::e_pow(1) == Coeff::e_pow(1, 2));
}

TEST_CASE("the two cones glue through kappa") {
  // e^a * e^-m kappa, by the sign of a - m:
  CHECK(Coeff::e_pow(1) * Coeff::neg_kappa(2) == Coeff::neg_kappa(1));
  CHECK(Coeff::e_pow(2) * Coeff::neg_kappa(2) == Coeff::kappa());
  CHECK(Coeff::e_pow(4) * Coeff::neg_kappa(2) == Coeff::e_pow(2, 2));
  CHECK(Coeff::e_pow(6) * Coeff::neg_kappa(2) == Coeff::e_pow(4, 2));
  // xi kills the negative cone.
  CHECK(Coeff::xi_pow(1) * Coeff::neg_kappa(1) == Coeff::zero());
  CHECK(Coeff::pos_cone(3, 1) * Coeff::neg_kappa(2) == Coeff::zero());
  // Within the negative cone.
  CHECK(Coeff::neg_kappa(1) * Coeff::neg_kappa(2) == Coeff::neg_kappa(3, 2));
}

TEST_CASE("norm classes tau") {
  CHECK(Coeff::tau(2) * Coeff::xi_pow(1) == Coeff::g());
  CHECK(Coeff::tau(4) * Coeff::xi_pow(1) == Coeff::tau(2));
  CHECK(Coeff::tau(2) * Coeff::xi_pow(2) == Coeff::xi_pow(1, 2));
  CHECK(Coeff::tau(2) * Coeff::e_pow(1) == Coeff::zero());
  CHECK(Coeff::tau(2) * Coeff::pos_cone(1, 1) == Coeff::zero());
  CHECK(Coeff::tau(2) * Coeff::tau(4) == Coeff::tau(6, 2));
  CHECK(Coeff::tau(2) * Coeff::neg_kappa(1) == Coeff::zero());
  CHECK_THROWS_AS(Coeff::tau(3), Error);   // odd
  CHECK_THROWS_AS(Coeff::tau(0), Error);   // too small
}

TEST_CASE("gradings of symbols") {
  CHECK(Coeff::g().grading() == RO2{0, 0});
  CHECK(Coeff::e_pow(3).grading() == RO2{0, 3});
  CHECK(Coeff::xi_pow(2).grading() == RO2{-4, 4});
  CHECK(Coeff::pos_cone(1, 1).grading() == RO2{-2, 3});
  CHECK(Coeff::neg_kappa(2).grading() == RO2{0, -2});
  CHECK(Coeff::tau(4).grading() == RO2{4, -4});
  CHECK_FALSE(Coeff::zero().grading().has_value());
  CHECK_FALSE((Coeff::one() + Coeff::e_pow(1)).grading().has_value());
  // Products are graded where defined.
  RO2 ge = *Coeff::e_pow(2).grading();
  RO2 gk = *Coeff::neg_kappa(2).grading();
  CHECK(ge + gk == RO2{0, 0});
  CHECK(*(Coeff::e_pow(2) * Coeff::neg_kappa(2)).grading() == RO2{0, 0});
}

TEST_CASE("powers") {
  CHECK(Coeff::e_pow(1).pow(4) == Coeff::e_pow(4));
  CHECK(Coeff::kappa().pow(3) == Coeff::kappa() * Coeff::kappa() * Coeff::kappa());
  CHECK(Coeff::tau(2).pow(2) == Coeff::tau(4, 2));
  CHECK(Coeff::integer(-1).pow(5) == Coeff::integer(-1));
  CHECK_THROWS_AS(Coeff::e_pow(1).pow(-1), Error);
}

TEST_CASE("scalar restriction rho (underlying point)") {
  CHECK(coeff_rho(Coeff::one()) == NoneqScalar::one());
  CHECK(coeff_rho(Coeff::g()) == NoneqScalar::integer(2));
  CHECK(coeff_rho(Coeff::xi_pow(1)) == NoneqScalar::unit(2));
  CHECK(coeff_rho(Coeff::xi_pow(3)) == NoneqScalar::unit(6));
  CHECK(coeff_rho(Coeff::e_pow(2)) == NoneqScalar::zero());
  CHECK(coeff_rho(Coeff::pos_cone(1, 2)) == NoneqScalar::zero());
  CHECK(coeff_rho(Coeff::neg_kappa(3)) == NoneqScalar::zero());
  CHECK(coeff_rho(Coeff::tau(4)) == NoneqScalar::unit(-4, 2));
  CHECK(coeff_rho(Coeff::kappa()) == NoneqScalar::zero());
  // rho is a ring map: check on a product that mixes species.
  Coeff x = Coeff::tau(2) * Coeff::xi_pow(1);  // = g
  CHECK(coeff_rho(x) == coeff_rho(Coeff::tau(2)) * coeff_rho(Coeff::xi_pow(1)));
}

TEST_CASE("scalar restriction phi (geometric fixed points)") {
  CHECK(coeff_phi(Coeff::one()) == FixedScalar::one());
  CHECK(coeff_phi(Coeff::g()) == FixedScalar::zero());
  CHECK(coeff_phi(Coeff::kappa()) == FixedScalar::integer(2));
  CHECK(coeff_phi(Coeff::e_pow(3)) == FixedScalar::unit(3));
  CHECK(coeff_phi(Coeff::xi_pow(1)) == FixedScalar::zero());
  CHECK(coeff_phi(Coeff::pos_cone(2, 1)) == FixedScalar::zero());
  CHECK(coeff_phi(Coeff::neg_kappa(2)) == FixedScalar::unit(-2, 2));
  CHECK(coeff_phi(Coeff::tau(2)) == FixedScalar::zero());
  // phi is a ring map: e^4 * e^-2 kappa = 2 e^2 on both sides.
  CHECK(coeff_phi(Coeff::e_pow(4) * Coeff::neg_kappa(2)) ==
        coeff_phi(Coeff::e_pow(4)) * coeff_phi(Coeff::neg_kappa(2)));
}

TEST_CASE("laurent scalars") {
  NoneqScalar i2 = NoneqScalar::unit(2);
  CHECK(i2 * NoneqScalar::unit(-2) == NoneqScalar::one());
  CHECK(i2.pow(-1) == NoneqScalar::unit(-2));
  CHECK((i2 + NoneqScalar::unit(2)).coefficient(2) == 2);
  CHECK((NoneqScalar::integer(3) + NoneqScalar::unit(1)).at_one() == 4);
  CHECK_THROWS_AS((NoneqScalar::one() + i2).pow(-1), Error);
  // Gradings: iota sits in sigma - 1, e in sigma.
  CHECK(NoneqScalar::unit(2).grading() == RO2{-2, 2});
  CHECK(FixedScalar::unit(3).grading() == RO2{0, 3});
  CHECK_FALSE((FixedScalar::one() + FixedScalar::unit(1)).grading().has_value());
}

TEST_CASE("symbol construction guards") {
  CHECK_THROWS_AS(Coeff::neg_kappa(0), Error);
  CHECK_THROWS_AS(Coeff::pos_cone(0, 0), Error);
  CHECK(Coeff::pos_cone(2, 0) == Coeff::e_pow(2));
  CHECK(Coeff::pos_cone(0, 2) == Coeff::xi_pow(2));
}
