// rewrite.hpp — confluent rewriting for the BU(2) presentation.
//
// The cohomology of BU(2) is presented over H by generators
// z0, z1, z2, cl, cxl, cw, cxw modulo three relations.  Orienting the
// relations (and three consequences needed for closure) along a weight order
// yields a rewriting system whose irreducible monomials form an H-module
// basis:
//
//   R1: z0*z1*z2      ->  xi
//   R2: z1*cxl        ->  (1-kappa) z0*z2*cl + e^2
//   R3: z0^2*z2^2*cl  ->  xi cxl + e^2 z0*z2
//   R4: z2^2*cxw      ->  (1-kappa) z0^2*cw + e^2 cxl
//   R5: z0^3*z1*cw    ->  xi z2*cxw - e^2 z0^2*z2*cl + e^4 z0
//   R6: z0^4*cl*cw    ->  xi cxl*cxw + e^2 z0^2*cl*cxl - e^2 z0*z2*cxw
//
// Monomial order: total weight (z0,z2: 1; z1: 2; cl: 4; cxl: 5; cw: 6;
// cxw: 7) with ties broken lexicographically, later-listed generators being
// lex-greater.  Every right-hand side is strictly weight-smaller than its
// left-hand side (checked at construction), so reduction terminates; local
// confluence is certified by resolving all 15 overlap pairs.
//
// The same left-hand sides with coefficients pushed through phi present the
// fixed-points ring P (x) Z[e^{+-1}] used by the phibar/psi computations.
#pragma once

#include <string>
#include <vector>

#include "bu2cc/ring.hpp"

namespace bu2cc {

// Weight-then-lex order on monomials of the BU(2) presentation.
int mono_weight(const Monomial& m);
bool mono_order_less(const Monomial& x, const Monomial& y);

template <class S>
struct Rule {
  std::string name;
  Monomial lhs;
  Poly<S> rhs;
};

template <class S>
class RewriteSystem {
 public:
  RewriteSystem(const Signature& sig, std::vector<Rule<S>> rules);

  const Signature& sig() const { return *sig_; }
  const std::vector<Rule<S>>& rules() const { return rules_; }

  // Index of the first rule whose lhs divides m, or -1.
  int reducer(const Monomial& m) const;
  bool is_basis_monomial(const Monomial& m) const { return reducer(m) < 0; }

  // Reduce to normal form, always rewriting the order-greatest reducible
  // monomial.  When chain is given, the polynomial after every single step
  // is appended to it.
  Poly<S> normal_form(const Poly<S>& p,
                      std::vector<Poly<S>>* chain = nullptr) const;

 private:
  const Signature* sig_;
  std::vector<Rule<S>> rules_;
};

extern template class RewriteSystem<Coeff>;
extern template class RewriteSystem<FixedScalar>;

// The BU(2) system over H, and its phi-image over Z[e^{+-1}].
const RewriteSystem<Coeff>& rewrite_bu2();
const RewriteSystem<FixedScalar>& rewrite_bu2_phi();

// ------------------------------------------------------------- confluence

struct Overlap {
  std::string rule_a, rule_b;
  Monomial lcm;
  bool coprime = false;  // disjoint supports: confluence is automatic
  // One-step reduct of lcm by each rule, then every intermediate down to
  // normal form.
  std::vector<Poly<Coeff>> chain_a, chain_b;
  Poly<Coeff> nf_a, nf_b;
  bool confluent = false;
};

// All 15 overlap pairs of the six rules, fully resolved.
std::vector<Overlap> confluence_overlaps();

// ------------------------------------------------------- basis enumeration

struct BasisElement {
  Monomial m;
  RO2 pos;  // grading(m) = page + pos.a + pos.b * sigma
};

// All irreducible monomials on the page {page + RO(C2)} with position
// a <= a_max, sorted by (a, b, order).
std::vector<BasisElement> enumerate_basis(const Grading& page, int a_max);

struct PageCell {
  RO2 pos;
  std::vector<Monomial> monomials;
};

// enumerate_basis grouped by position.
std::vector<PageCell> page_cells(const Grading& page, int a_max);

}  // namespace bu2cc
