// units.hpp — the grading-zero part, the unit group, and the duality
// involution of the BU(2) cohomology ring.
//
// In grading zero the ring is free of rank 4 over Z on
//   1,  g,  eps_l = e^-2 kappa z0 z2 cl,  eps_w = e^-4 kappa z0^2 z1 cw,
// with structure constants (derived here by normal-form computation, not
// hardcoded):
//   g^2 = 2g,  g eps_l = g eps_w = 0,
//   eps_l^2 = 2 eps_l,  eps_w^2 = 2 eps_w,  eps_l eps_w = 0.
// The multiplicative units are the 16 elements
//   +-(1-kappa)^a (1-eps_l)^b (1-eps_w)^c,  a, b, c in {0, 1},
// i.e. exactly the (u1, ug, ul, uw) with u1 = +-1 and the other coordinates
// in {0, -u1}.
//
// Duality: the involution induced by sending each tautological bundle to its
// dual.  It fixes H and the Euler classes and acts on the remaining
// generators by unit multiples:
//   cl  -> -(1-eps_l) cl          cxl -> -(1-kappa)(1-eps_l) cxl
//   cw  ->  (1-eps_l) cw          cxw ->  (1-eps_l) cxw
#pragma once

#include <optional>
#include <vector>

#include "bu2cc/rewrite.hpp"

namespace bu2cc {

// Element a1 + a2 g + a3 eps_l + a4 eps_w of the grading-zero part.
struct GradingZero {
  long long u1 = 0, ug = 0, ul = 0, uw = 0;
  friend bool operator==(const GradingZero&, const GradingZero&) = default;
  friend auto operator<=>(const GradingZero&, const GradingZero&) = default;
  std::string str() const;
};

GradingZero gz_one();
GradingZero gz_add(const GradingZero& x, const GradingZero& y);
GradingZero gz_neg(const GradingZero& x);
// Product via the derived structure constants.
GradingZero gz_mul(const GradingZero& x, const GradingZero& y);

// The idempotent-like classes as polynomials (normal forms in P).
const Poly<Coeff>& eps_l_poly();
const Poly<Coeff>& eps_w_poly();

// Embed into P / read off a normal form of grading zero.
Poly<Coeff> gz_embed(const GradingZero& u);
std::optional<GradingZero> gz_decompose(const Poly<Coeff>& normal_form);

bool is_unit(const GradingZero& u);
// The full unit group (16 elements, deduplicated, deterministic order).
std::vector<GradingZero> unit_group();

// The duality involution, extended multiplicatively and reduced to normal
// form.
Poly<Coeff> dualize(const Poly<Coeff>& p);
const Poly<Coeff>& dual_gen(int i);

}  // namespace bu2cc
