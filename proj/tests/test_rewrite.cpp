// Tests for the rewriting system: the rule table, the monomial order,
// termination, normal forms, confluence certificates, and basis enumeration.
#include "doctest.h"

#include <map>
#include <set>

#include "bu2cc/expr.hpp"
#include "bu2cc/rewrite.hpp"

using namespace bu2cc;

namespace {
Poly<Coeff> P(const std::string& s) { return parse_poly_h(sig_P(), s); }
Monomial M(const std::string& s) { return parse_monomial(sig_P(), s); }
Poly<Coeff> NF(const std::string& s) { return rewrite_bu2().normal_form(P(s)); }
}  // namespace

TEST_CASE("rule table shape") {
  const auto& rules = rewrite_bu2().rules();
  REQUIRE(rules.size() == 6);
  const char* names[] = {"R1", "R2", "R3", "R4", "R5", "R6"};
  const char* lhss[] = {"z0*z1*z2", "z1*cxl",     "z0^2*z2^2*cl",
                        "z2^2*cxw", "z0^3*z1*cw", "z0^4*cl*cw"};
  for (size_t i = 0; i < 6; ++i) {
    CHECK(rules[i].name == names[i]);
    CHECK(rules[i].lhs == M(lhss[i]));
    // Every rule is a homogeneous rewrite: rhs grading = lhs grading.
    CHECK(rules[i].rhs.grading() == monomial_grading(sig_P(), rules[i].lhs));
    // ... and strictly order-decreasing (termination).
    for (const auto& [m, c] : rules[i].rhs.terms)
      CHECK(mono_order_less(m, rules[i].lhs));
  }
  CHECK(rules[0].rhs == P("xi"));
  CHECK(rules[1].rhs == P("(1 - k)*z0*z2*cl + e^2"));
}

TEST_CASE("monomial order: weight first, then lex from the back") {
  CHECK(mono_weight(M("z0*z1*z2")) == 4);
  CHECK(mono_weight(M("cxw")) == 7);
  CHECK(mono_order_less(M("z0^3"), M("z1*cl")));      // weight 3 < 6
  CHECK(mono_order_less(M("z0*z2*cl"), M("z1*cxl"))); // weight 6 < 7
  // Equal weight 6: cw beats any product of earlier generators.
  CHECK(mono_order_less(M("z0^2*cl"), M("cw")));
  CHECK(mono_order_less(M("z0^6"), M("z1^3")));
  CHECK_FALSE(mono_order_less(M("z0"), M("z0")));
  CHECK_THROWS_AS(mono_weight(Monomial(3, 0)), Error);
}

TEST_CASE("single reductions") {
  CHECK(NF("z0*z1*z2") == P("xi"));
  CHECK(NF("z1*cxl") == P("(1 - k)*z0*z2*cl + e^2"));
  // (g - 1) is how 1 - kappa prints once expanded.
  CHECK(poly_str(NF("z1*cxl")) == "(-1 + g)*z0*z2*cl + e^2");
  // Reduction applies inside a cofactor and respects coefficients.
  CHECK(NF("g*z0^2*z1*z2") == P("g*xi*z0"));
  CHECK(NF("z0*z1*z2 - xi").is_zero());
}

TEST_CASE("normal forms are irreducible fixed points") {
  const auto& rw = rewrite_bu2();
  for (const char* s :
       {"z1^2*cxl^2", "z0^2*z2^2*cl*cw", "z2^4*cxw^2", "z0^5*z1^2*cw*cxl",
        "(1 + g)*z0*z1*z2*cxw + e^2*cl^3", "z0^4*z1*z2^4*cl*cw*cxw"}) {
    Poly<Coeff> n = rw.normal_form(P(s));
    CAPTURE(s);
    CHECK(rw.normal_form(n) == n);  // idempotent
    for (const auto& [m, c] : n.terms) CHECK(rw.is_basis_monomial(m));
  }
}

TEST_CASE("reduction chains") {
  std::vector<Poly<Coeff>> chain;
  Poly<Coeff> n = rewrite_bu2().normal_form(P("z1*cxl"), &chain);
  REQUIRE(chain.size() == 1);
  CHECK(chain.back() == n);
  chain.clear();
  // z1^2*cxl^2 takes three steps: R2, then R1, then R2 again.
  n = rewrite_bu2().normal_form(P("z1^2*cxl^2"), &chain);
  CHECK(chain.size() == 3);
  CHECK(chain.back() == n);
  CHECK(n == P("xi*cl*cxl - e^2*z0*z2*cl + e^4"));
}

TEST_CASE("reducibility of monomials") {
  const auto& rw = rewrite_bu2();
  CHECK(rw.reducer(M("z0*z1*z2")) == 0);
  CHECK(rw.reducer(M("z0*z1*z2*cw^2")) == 0);  // divisibility, not equality
  CHECK(rw.reducer(M("z1^3*cxl")) == 1);
  CHECK(rw.is_basis_monomial(M("z0^5")));
  CHECK(rw.is_basis_monomial(M("z1^4*cl^2")));
  CHECK(rw.is_basis_monomial(M("cw^3*cxw")));
  CHECK_FALSE(rw.is_basis_monomial(M("z0^4*z2^2*cl^2")));  // contains R3
}

TEST_CASE("confluence: all 15 overlaps resolve") {
  std::vector<Overlap> all = confluence_overlaps();
  REQUIRE(all.size() == 15);
  std::set<std::pair<std::string, std::string>> coprime;
  for (const Overlap& o : all) {
    CAPTURE(o.rule_a + "/" + o.rule_b);
    CHECK(o.confluent);
    CHECK(o.nf_a == o.nf_b);
    if (o.coprime) coprime.insert({o.rule_a, o.rule_b});
  }
  CHECK(coprime == std::set<std::pair<std::string, std::string>>{
                       {"R2", "R3"}, {"R2", "R4"}, {"R2", "R6"},
                       {"R4", "R5"}, {"R4", "R6"}});
}

TEST_CASE("confluence: frozen joined values") {
  std::map<std::pair<std::string, std::string>, std::string> expected = {
      {{"R1", "R2"}, "xi*cxl"},
      {{"R1", "R3"}, "xi*z0*z2*cl"},
      {{"R1", "R4"}, "xi*z2*cxw"},
      {{"R1", "R5"}, "xi*z0^2*cw"},
      {{"R1", "R6"}, "xi*z0^3*cl*cw"},
      {{"R2", "R5"},
       "xi*z2*cxl*cxw - e^2*z0^2*z2*cl*cxl + e^4*z0*cxl"},
      {{"R3", "R4"}, "xi*cxl*cxw + e^2*z0*z2*cxw"},
      {{"R3", "R5"}, "xi*z0^2*z2*cl*cw"},
      {{"R3", "R6"}, "xi*z0^2*cxl*cw + e^2*z0^3*z2*cw"},
      {{"R5", "R6"},
       "xi*z0*z2*cl*cxw - e^2*z0^3*z2*cl^2 + e^4*z0^2*cl"},
  };
  int found = 0;
  for (const Overlap& o : confluence_overlaps()) {
    auto it = expected.find({o.rule_a, o.rule_b});
    if (it == expected.end()) continue;
    ++found;
    CAPTURE(o.rule_a + "/" + o.rule_b);
    CHECK(poly_str(o.nf_a) == it->second);
    // The recorded chains really end at the joined value.
    REQUIRE_FALSE(o.chain_a.empty());
    REQUIRE_FALSE(o.chain_b.empty());
    CHECK(o.chain_a.back() == o.nf_a);
    CHECK(o.chain_b.back() == o.nf_b);
  }
  CHECK(found == 10);
}

TEST_CASE("the phi-image system reduces compatibly") {
  const auto& rwp = rewrite_bu2_phi();
  REQUIRE(rwp.rules().size() == 6);
  // Same left-hand sides, coefficients pushed through phi.
  for (size_t i = 0; i < 6; ++i)
    CHECK(rwp.rules()[i].lhs == rewrite_bu2().rules()[i].lhs);
  Poly<FixedScalar> p = parse_poly_fixed(sig_P(), "z1*cxl");
  CHECK(rwp.normal_form(p) ==
        parse_poly_fixed(sig_P(), "e^2 - z0*z2*cl"));  // phi(1 - kappa) = -1
}

TEST_CASE("basis enumeration on the zero page") {
  auto basis = enumerate_basis(Grading(3), 6);
  // Counts per position reproduce the module structure of the page.
  std::map<std::pair<int, int>, int> counts;
  for (const BasisElement& b : basis) ++counts[{b.pos.a, b.pos.b}];
  CHECK(counts[{0, 0}] == 1);
  CHECK(counts[{2, 2}] == 1);
  CHECK(counts[{2, 4}] == 2);
  CHECK(counts[{4, 6}] == 3);
  CHECK(counts[{6, 8}] == 4);
  CHECK(counts[{6, 10}] == 2);
  // Sorted by (a, b) with the order-descending monomials inside a cell.
  CHECK(basis.front().m == Monomial(7, 0));
  // Cells regrouped agree with the flat enumeration; within a cell the
  // monomials come in ascending order.
  auto cells = page_cells(Grading(3), 6);
  size_t total = 0;
  for (const PageCell& c : cells) {
    total += c.monomials.size();
    for (size_t j = 0; j + 1 < c.monomials.size(); ++j)
      CHECK(mono_order_less(c.monomials[j], c.monomials[j + 1]));
  }
  CHECK(total == basis.size());
  // Every enumerated monomial is irreducible and lands on the page.
  for (const BasisElement& b : basis) {
    CHECK(rewrite_bu2().is_basis_monomial(b.m));
    CHECK(monomial_grading(sig_P(), b.m) ==
          Grading(3) + Grading::ro2({b.pos.a, b.pos.b}));
  }
}

TEST_CASE("basis enumeration respects the page argument") {
  Grading page = Grading::omega(0);
  for (const BasisElement& b : enumerate_basis(page, 4)) {
    CHECK(monomial_grading(sig_P(), b.m) ==
          page + Grading::ro2({b.pos.a, b.pos.b}));
  }
  // z0 itself is the unique class at position (0, 0) of its own page.
  auto cells = page_cells(page, 0);
  REQUIRE_FALSE(cells.empty());
  CHECK(cells.front().pos == RO2{0, 0});
  REQUIRE(cells.front().monomials.size() == 1);
  CHECK(monomial_str(sig_P(), cells.front().monomials.front()) == "z0");
}
