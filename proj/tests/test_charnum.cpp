// Tests for characteristic numbers: fixture loading, truncated products,
// tangent pullbacks, the full number tables of the four reference manifolds,
// and bordism separation.
#include "doctest.h"

#include <string>

#include "bu2cc/charnum.hpp"
#include "bu2cc/expr.hpp"

using namespace bu2cc;

#ifndef BU2CC_DATA_DIR
#define BU2CC_DATA_DIR "data"
#endif

namespace {

const std::string kData = BU2CC_DATA_DIR;

Coeff num(const Manifold& x, const std::string& cls) {
  const Signature& src = x.source == "bu1" ? sig_bu1() : sig_P();
  return charnum(x, parse_monomial(src, cls));
}

}  // namespace

TEST_CASE("fixture loading") {
  Manifold x20 = load_manifold(kData, "X20");
  CHECK(x20.name == "X20");
  CHECK(x20.source == "bu1");
  CHECK(x20.dim == parse_grading("2 + O1", 2));
  Manifold x21 = load_manifold(kData, "X21");
  CHECK(x21.source == "bu2");
  CHECK(x21.dim == parse_grading("4 + O1 + 2*O2", 3));
  CHECK_THROWS_AS(load_manifold(kData, "X99"), Error);
}

TEST_CASE("relevant classes of the line dimension") {
  auto classes = relevant_classes(parse_grading("2 + O1", 2));
  REQUIRE(classes.size() == 2);
  CHECK(monomial_str(sig_bu1(), classes[0].m) == "cw");
  CHECK(monomial_str(sig_bu1(), classes[1].m) == "z0*cw^2");
  // Both sit in the pairing wedge: a' <= 0 and a' + b' >= 0.
  for (const auto& be : classes) {
    CHECK(be.pos.a <= 0);
    CHECK(be.pos.a + be.pos.b >= 0);
  }
}

TEST_CASE("relevant classes of the surface dimension") {
  auto classes = relevant_classes(parse_grading("4 + O1 + 2*O2", 3));
  const char* expected[] = {"z0*z2^3*cl^2",      "cw",
                            "z2^2*cl^2*cxl",     "z0*z2*cl*cw",
                            "z0*z2^3*cl^3*cxl",  "z0^2*z1*cw^2"};
  REQUIRE(classes.size() == 6);
  for (size_t i = 0; i < 6; ++i)
    CHECK(monomial_str(sig_P(), classes[i].m) == expected[i]);
}

TEST_CASE("line numbers") {
  Manifold x20 = load_manifold(kData, "X20");
  Manifold x11 = load_manifold(kData, "X11");
  CHECK(num(x20, "cw") == Coeff::integer(2));
  CHECK(num(x20, "z0*cw^2") == Coeff::zero());
  CHECK(num(x11, "cw") == Coeff::integer(2));
  CHECK(num(x11, "z0*cw^2") == Coeff::e_pow(2, 2));
}

TEST_CASE("surface numbers") {
  Manifold x30 = load_manifold(kData, "X30");
  CHECK(num(x30, "z0*z2^3*cl^2") == Coeff::xi_pow(1, 9));
  CHECK(num(x30, "cw") == Coeff::integer(3));
  CHECK(num(x30, "z2^2*cl^2*cxl") == Coeff::e_pow(2, 9));
  CHECK(num(x30, "z0*z2*cl*cw") == Coeff::zero());
  CHECK(num(x30, "z0*z2^3*cl^3*cxl") == Coeff::zero());
  CHECK(num(x30, "z0^2*z1*cw^2") == Coeff::zero());

  Manifold x21 = load_manifold(kData, "X21");
  CHECK(num(x21, "z0*z2^3*cl^2") == Coeff::xi_pow(1, 9));
  CHECK(num(x21, "cw") == Coeff::integer(3));
  CHECK(num(x21, "z2^2*cl^2*cxl") == Coeff::e_pow(2, 3));
  CHECK(num(x21, "z0*z2*cl*cw") == Coeff::e_pow(2, 2));
  CHECK(num(x21, "z0*z2^3*cl^3*cxl") == Coeff::e_pow(4, 3));
  CHECK(num(x21, "z0^2*z1*cw^2") == Coeff::e_pow(4));
}

TEST_CASE("bordism separation") {
  Manifold x20 = load_manifold(kData, "X20");
  Manifold x11 = load_manifold(kData, "X11");
  DistinguishResult lines = bordism_distinguish(x20, x11);
  CHECK(lines.distinguished);
  CHECK(lines.witness == "z0*cw^2");
  CHECK(lines.value_a == Coeff::zero());
  CHECK(lines.value_b == Coeff::e_pow(2, 2));

  Manifold x30 = load_manifold(kData, "X30");
  Manifold x21 = load_manifold(kData, "X21");
  DistinguishResult surfaces = bordism_distinguish(x30, x21);
  CHECK(surfaces.distinguished);
  CHECK(surfaces.witness == "z2^2*cl^2*cxl");
  CHECK(surfaces.value_a == Coeff::e_pow(2, 9));
  CHECK(surfaces.value_b == Coeff::e_pow(2, 3));

  // A manifold never differs from itself...
  CHECK_FALSE(bordism_distinguish(x21, x21).distinguished);
  // ... and dimensions must agree before comparing.
  CHECK_THROWS_AS(bordism_distinguish(x20, x21), Error);
}

TEST_CASE("truncated products in a fixture presentation") {
  Manifold x30 = load_manifold(kData, "X30");
  REQUIRE(x30.sig != nullptr);
  REQUIRE(x30.nilpotency == 3);
  int cd = x30.sig->index("cd");
  REQUIRE(cd >= 0);
  // Any non-invertible generator to the nilpotency power dies.
  Poly<Coeff> gen = Poly<Coeff>::generator(*x30.sig, cd);
  CHECK(manifold_pow(x30, gen, x30.nilpotency).is_zero());
  CHECK(manifold_mul(x30, gen.pow(2), gen).is_zero());
  CHECK(manifold_mul(x30, gen, Poly<Coeff>::one(*x30.sig)) == gen);
  // Product facts: the square of the cw-image on X11 collapses to e^4.
  Manifold x11 = load_manifold(kData, "X11");
  Poly<Coeff> cw_img = tangent_pullback(x11, parse_monomial(sig_bu1(), "cw"));
  CHECK(manifold_pow(x11, cw_img, 2) ==
        Poly<Coeff>::scalar(*x11.sig, Coeff::e_pow(4)));
}

TEST_CASE("tangent pullback and evaluation errors") {
  Manifold x21 = load_manifold(kData, "X21");
  // The pullback of a relevant class is an element of the fixture ring.
  Poly<Coeff> t = tangent_pullback(x21, parse_monomial(sig_P(), "cw"));
  CHECK(t.sig == x21.sig.get());
  CHECK(evaluate(x21, t) == Coeff::integer(3));
  // Evaluating a monomial absent from the pairing table is an error.
  Poly<Coeff> stray = Poly<Coeff>::generator(*x21.sig, x21.sig->index("cd"), 2);
  CHECK_THROWS_AS(evaluate(x21, stray), Error);
  // ... as is mixing rings.
  CHECK_THROWS_AS(evaluate(x21, Poly<Coeff>::one(sig_P())), Error);
}
