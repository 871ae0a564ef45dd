// Tests for the three restriction maps: generator images, multiplicativity,
// invariance on the defining relations, iota-canonicalization, the section
// psi, and fixed sets.
#include "doctest.h"

#include "bu2cc/expr.hpp"
#include "bu2cc/maps.hpp"
#include "bu2cc/rewrite.hpp"

using namespace bu2cc;

namespace {
Poly<Coeff> P(const std::string& s) { return parse_poly_h(sig_P(), s); }
Poly<NoneqScalar> R(const std::string& s) {
  return parse_poly_noneq(sig_rho(), s);
}
}  // namespace

TEST_CASE("eta generator images") {
  CHECK(eta_gen(0) == eta_triple("xi*z1^-1*z2^-1", "z0", "z0"));
  CHECK(eta_gen(1) == eta_triple("z1", "xi*z0^-1*z2^-1", "z1"));
  CHECK(eta_gen(2) == eta_triple("z2", "z2", "xi*z0^-1*z1^-1"));
  CHECK(eta_gen(3) ==
        eta_triple("c1*z1", "(e^2 + xi*(x1 + x2))*z0^-1*z2^-1", "c1*z1"));
  CHECK(eta_gen(4) ==
        eta_triple("(e^2 + xi*c1)*z1^-1", "(x1 + x2)*z0*z2",
                   "(e^2 + xi*c1)*z1^-1"));
  // Each image is homogeneous of the generator's grading.
  for (int i = 0; i < 7; ++i) {
    CAPTURE(i);
    CHECK(eta_gen(i).homogeneous_of(sig_P().gens[static_cast<size_t>(i)].grading));
  }
}

TEST_CASE("eta on the defining relations") {
  // eta is a ring map, so both orientations of every rule restrict equally;
  // this is the identity that pins the characteristic-class images.
  const auto& rw = rewrite_bu2();
  for (const auto& rule : rw.rules()) {
    CAPTURE(rule.name);
    Poly<Coeff> lhs = Poly<Coeff>::monomial(sig_P(), rule.lhs, Coeff::one());
    CHECK(eta(lhs) == eta(rule.rhs));
  }
  // The middle relation takes the shared value e^2 + xi*c1 on the outer
  // components and xi*(x1 + x2) on the middle one.
  Triple<Coeff> t = eta(P("z1*cxl"));
  CHECK(t.c0 == parse_poly_h(sig_eta0(), "e^2 + xi*c1"));
  CHECK(t.c1 == parse_poly_h(sig_eta1(), "xi*(x1 + x2)"));
  CHECK(t.c2 == parse_poly_h(sig_eta2(), "e^2 + xi*c1"));
}

TEST_CASE("eta is multiplicative and additive") {
  Poly<Coeff> p = P("z0*cl + e^2*z2");
  Poly<Coeff> q = P("g*cw + z1^2");
  CHECK(eta(p * q) == eta(p) * eta(q));
  CHECK(eta(p + q) == eta(p) + eta(q));
  CHECK(eta(Poly<Coeff>::one(sig_P())) ==
        eta_triple("1", "1", "1"));
  CHECK_THROWS_AS(eta(Poly<Coeff>::one(sig_eta0())), Error);
}

TEST_CASE("rho generator images and canonicalization") {
  CHECK(rho_gen(0) == R("z0"));
  CHECK(rho_gen(3) == R("z1*c1"));
  CHECK(rho_gen(4) == R("z0*z2*c1"));
  CHECK(rho_gen(5) == R("z1*z2^2*c2"));
  CHECK(rho_gen(6) == R("z0^2*z1*c2"));
  // xi restricts to iota^2, which canonicalizes to the relation monomial.
  CHECK(rho(P("xi")) == R("z0*z1*z2"));
  CHECK(rho(P("xi^2")) == R("z0^2*z1^2*z2^2"));
  // Odd iota-powers keep a single bare iota.
  Poly<NoneqScalar> odd = rho_canonicalize(
      Poly<NoneqScalar>::scalar(sig_rho(), NoneqScalar::unit(3)));
  CHECK(odd == Poly<NoneqScalar>::monomial(
                   sig_rho(), parse_monomial(sig_rho(), "z0*z1*z2"),
                   NoneqScalar::unit(1)));
  // Negative iota-powers divide by the relation monomial (the zetas are
  // invertible in the target).
  Poly<NoneqScalar> neg = rho_canonicalize(
      Poly<NoneqScalar>::scalar(sig_rho(), NoneqScalar::unit(-2)));
  CHECK(neg == Poly<NoneqScalar>::monomial(
                   sig_rho(), parse_monomial(sig_rho(), "z0^-1*z1^-1*z2^-1"),
                   NoneqScalar::one()));
}

TEST_CASE("rho kills the euler classes' torsion friends") {
  CHECK(rho(P("e^2*cl")).is_zero());
  CHECK(rho(P("g")) ==
        Poly<NoneqScalar>::scalar(sig_rho(), NoneqScalar::integer(2)));
  // rho is a ring map on a nontrivial product.
  Poly<Coeff> p = P("z1*cxl");
  CHECK(rho(p) == rho_canonicalize(rho_gen(1) * rho_gen(4)));
  // ... and invariant under rewriting.
  CHECK(rho(p) == rho(rewrite_bu2().normal_form(p)));
}

TEST_CASE("phibar agrees with phi after eta on generators") {
  for (int i = 0; i < 7; ++i) {
    CAPTURE(i);
    CHECK(triple_phi(eta_gen(i)) == phibar_gen(i));
  }
}

TEST_CASE("phibar on polynomials") {
  CHECK(phibar_of(P("z0")) == fixed_triple("0", "z0", "z0"));
  // phibar(cl) * phibar(cxl): the inverted zetas cancel pairwise.
  CHECK(phibar_of(P("cl*cxl")) ==
        fixed_triple("e^2*c1", "e^2*(x1 + x2)", "e^2*c1"));
  // Relation invariance in the fixed-point system.
  Poly<FixedScalar> p = parse_poly_fixed(sig_P(), "z1*cxl + e^2*z0");
  CHECK(phibar(p) == phibar(rewrite_bu2_phi().normal_form(p)));
  // Multiplicativity.
  Poly<Coeff> a = P("cl + z0*z2");
  Poly<Coeff> b = P("cw");
  CHECK(phibar_of(a * b) == phibar_of(a) * phibar_of(b));
}

TEST_CASE("psi is a section of phibar") {
  const auto& table = psi_table();
  REQUIRE(table.size() == 21);
  for (const PsiEntry& entry : table) {
    CAPTURE(entry.label);
    // The recorded preimage really is a normal form...
    CHECK(rewrite_bu2_phi().normal_form(entry.value) == entry.value);
    // ... and hits the recorded target.
    CHECK(phibar(entry.value) == entry.target);
  }
}

TEST_CASE("fixed sets") {
  CHECK(fixed_sets(P("cl*cxl")) ==
        Triple<long long>{parse_poly_int(sig_fixed0(), "c1"),
                          parse_poly_int(sig_fixed1(), "x1 + x2"),
                          parse_poly_int(sig_fixed2(), "c1")});
  CHECK(fixed_sets(P("z0*z2*cl")) ==
        Triple<long long>{parse_poly_int(sig_fixed0(), "0"),
                          parse_poly_int(sig_fixed1(), "1"),
                          parse_poly_int(sig_fixed2(), "0")});
  // g dies on geometric fixed points, e becomes 1.
  CHECK(fixed_sets(P("g*cl")).is_zero());
  CHECK(fixed_sets(P("e^2")) ==
        Triple<long long>{parse_poly_int(sig_fixed0(), "1"),
                          parse_poly_int(sig_fixed1(), "1"),
                          parse_poly_int(sig_fixed2(), "1")});
}
