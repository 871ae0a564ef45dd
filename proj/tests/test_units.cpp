// Tests for the grading-zero lattice, the unit group, and the duality
// involution.
#include "doctest.h"

#include <algorithm>
#include <set>

#include "bu2cc/expr.hpp"
#include "bu2cc/rewrite.hpp"
#include "bu2cc/units.hpp"

using namespace bu2cc;

namespace {
Poly<Coeff> P(const std::string& s) { return parse_poly_h(sig_P(), s); }
constexpr GradingZero kOne{1, 0, 0, 0};
constexpr GradingZero kG{0, 1, 0, 0};
constexpr GradingZero kEl{0, 0, 1, 0};
constexpr GradingZero kEw{0, 0, 0, 1};
}  // namespace

TEST_CASE("the idempotent-like classes") {
  // eps_l = e^-2 kappa z0 z2 cl and eps_w = e^-4 kappa z0^2 z1 cw are
  // already normal forms of grading zero.
  CHECK(eps_l_poly() == rewrite_bu2().normal_form(P("einv^2*k*z0*z2*cl")));
  CHECK(eps_w_poly() == rewrite_bu2().normal_form(P("einv^4*k*z0^2*z1*cw")));
  CHECK(eps_l_poly().grading() == Grading(3));
  CHECK(eps_w_poly().grading() == Grading(3));
}

TEST_CASE("structure constants of the grading-zero lattice") {
  CHECK(gz_mul(kG, kG) == GradingZero{0, 2, 0, 0});
  CHECK(gz_mul(kG, kEl) == GradingZero{});
  CHECK(gz_mul(kG, kEw) == GradingZero{});
  CHECK(gz_mul(kEl, kEl) == GradingZero{0, 0, 2, 0});
  CHECK(gz_mul(kEw, kEw) == GradingZero{0, 0, 0, 2});
  CHECK(gz_mul(kEl, kEw) == GradingZero{});
  CHECK(gz_mul(kOne, kEl) == kEl);
  // The lattice operations are commutative and unital.
  GradingZero x{2, -1, 3, 1}, y{-1, 4, 0, 2};
  CHECK(gz_mul(x, y) == gz_mul(y, x));
  CHECK(gz_mul(x, gz_one()) == x);
  CHECK(gz_add(x, gz_neg(x)) == GradingZero{});
}

TEST_CASE("embedding and decomposition are inverse") {
  for (const GradingZero& u :
       {GradingZero{1, 0, 0, 0}, GradingZero{0, 1, 0, 0},
        GradingZero{3, -2, 5, 7}, GradingZero{-1, 1, -1, 0},
        GradingZero{0, 0, 0, 0}}) {
    CAPTURE(u.str());
    CHECK(gz_decompose(gz_embed(u)) == u);
  }
  // gz_mul really is multiplication in the ring.
  GradingZero x{1, -1, 2, 0}, y{0, 2, 1, -3};
  Poly<Coeff> prod = rewrite_bu2().normal_form(gz_embed(x) * gz_embed(y));
  CHECK(gz_decompose(prod) == gz_mul(x, y));
}

TEST_CASE("decomposition rejects strangers") {
  // Wrong monomial support.
  CHECK_FALSE(gz_decompose(P("cl")).has_value());
  CHECK_FALSE(gz_decompose(rewrite_bu2().normal_form(P("z0*z2*cl"))).has_value());
  // Right support, wrong coefficient species.
  CHECK_FALSE(gz_decompose(P("e^2")).has_value());
  CHECK_FALSE(gz_decompose(P("einv^4*k*z0*z2*cl")).has_value());
  // The zero polynomial is the origin of the lattice.
  CHECK(gz_decompose(Poly<Coeff>::zero(sig_P())) == GradingZero{});
}

TEST_CASE("the unit group has exactly sixteen elements") {
  std::vector<GradingZero> units = unit_group();
  CHECK(units.size() == 16);
  std::set<GradingZero> set(units.begin(), units.end());
  CHECK(set.size() == 16);
  for (const GradingZero& u : units) {
    CAPTURE(u.str());
    CHECK(is_unit(u));
    CHECK(gz_mul(u, u) == gz_one());  // every unit is an involution
    CHECK(set.count(gz_neg(u)) == 1);
  }
  // The three named sign units and their products are all present.
  GradingZero one_minus_kappa{-1, 1, 0, 0};
  GradingZero one_minus_el{1, 0, -1, 0};
  GradingZero one_minus_ew{1, 0, 0, -1};
  CHECK(set.count(one_minus_kappa) == 1);
  CHECK(set.count(one_minus_el) == 1);
  CHECK(set.count(one_minus_ew) == 1);
  CHECK(set.count(gz_mul(one_minus_kappa, one_minus_el)) == 1);
  CHECK(set.count(gz_mul(gz_mul(one_minus_kappa, one_minus_el),
                         one_minus_ew)) == 1);
  // Non-units are rejected.
  CHECK_FALSE(is_unit(kG));
  CHECK_FALSE(is_unit(GradingZero{2, 0, 0, 0}));
  CHECK_FALSE(is_unit(GradingZero{1, 1, 0, 0}));  // (1+g)^2 = 1 + 4g
}

TEST_CASE("duality fixes the euler classes and twists the rest") {
  CHECK(dual_gen(0) == P("z0"));
  CHECK(dual_gen(1) == P("z1"));
  CHECK(dual_gen(2) == P("z2"));
  // cl goes to -(1 - eps_l) cl.
  Poly<Coeff> cl = P("cl");
  Poly<Coeff> expect =
      rewrite_bu2().normal_form(-(Poly<Coeff>::one(sig_P()) - eps_l_poly()) * cl);
  CHECK(dual_gen(3) == expect);
  CHECK(dualize(cl) == expect);
}

TEST_CASE("duality is a ring involution") {
  for (int i = 0; i < 7; ++i) {
    CAPTURE(i);
    Poly<Coeff> gen = Poly<Coeff>::generator(sig_P(), i);
    CHECK(dualize(dualize(gen)) == gen);
  }
  Poly<Coeff> p = rewrite_bu2().normal_form(P("z1*cxl + g*cw"));
  Poly<Coeff> q = rewrite_bu2().normal_form(P("z0^2*cl - e^2*z2"));
  CHECK(dualize(dualize(p)) == p);
  CHECK(dualize(p * q) == rewrite_bu2().normal_form(dualize(p) * dualize(q)));
  CHECK(dualize(p + q) == dualize(p) + dualize(q));
  // Duality respects the defining relations.
  for (const auto& rule : rewrite_bu2().rules()) {
    CAPTURE(rule.name);
    Poly<Coeff> lhs = Poly<Coeff>::monomial(sig_P(), rule.lhs, Coeff::one());
    CHECK(dualize(lhs) == dualize(rule.rhs));
  }
  // The idempotent-like classes are self-dual, as is the coefficient ring.
  CHECK(dualize(eps_l_poly()) == eps_l_poly());
  CHECK(dualize(eps_w_poly()) == eps_w_poly());
  CHECK(dualize(P("g + e^2")) == P("g + e^2"));
}
