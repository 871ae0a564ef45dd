// rewrite.cpp — rule tables, normal forms, confluence, basis enumeration.
#include "bu2cc/rewrite.hpp"

#include <array>
#include <cassert>

#include "bu2cc/expr.hpp"

namespace bu2cc {

namespace {
// Generator weights for z0, z1, z2, cl, cxl, cw, cxw.
constexpr std::array<int, 7> kWeights = {1, 2, 1, 4, 5, 6, 7};
}  // namespace

int mono_weight(const Monomial& m) {
  if (m.size() != kWeights.size())
    throw Error("mono_weight: not a BU(2) presentation monomial");
  int w = 0;
  for (size_t i = 0; i < m.size(); ++i) w += kWeights[i] * m[i];
  return w;
}

bool mono_order_less(const Monomial& x, const Monomial& y) {
  int wx = mono_weight(x), wy = mono_weight(y);
  if (wx != wy) return wx < wy;
  // Later-listed generators are lex-greater, so compare from the back.
  for (size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

template <class S>
RewriteSystem<S>::RewriteSystem(const Signature& sig,
                                std::vector<Rule<S>> rules)
    : sig_(&sig), rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    // Compatibility with the order: every rhs monomial strictly smaller.
    for (auto& [m, c] : r.rhs.terms)
      if (!mono_order_less(m, r.lhs))
        throw Error("rule " + r.name + " is not order-decreasing");
    // Homogeneity: rhs grading (if nonzero) must match the lhs grading.
    if (!r.rhs.is_zero()) {
      auto g = r.rhs.grading();
      if (!g || !(*g == monomial_grading(sig, r.lhs)))
        throw Error("rule " + r.name + " is not homogeneous");
    }
  }
}

template <class S>
int RewriteSystem<S>::reducer(const Monomial& m) const {
  for (size_t i = 0; i < rules_.size(); ++i)
    if (mono_divides(rules_[i].lhs, m)) return static_cast<int>(i);
  return -1;
}

template <class S>
Poly<S> RewriteSystem<S>::normal_form(const Poly<S>& p,
                                      std::vector<Poly<S>>* chain) const {
  Poly<S> cur = p;
  while (true) {
    // Locate the order-greatest reducible monomial.
    const Monomial* best = nullptr;
    int best_rule = -1;
    for (auto& [m, c] : cur.terms) {
      int r = reducer(m);
      if (r >= 0 && (!best || mono_order_less(*best, m))) {
        best = &m;
        best_rule = r;
      }
    }
    if (!best) return cur;
    Monomial at = *best;
    S coeff = cur.terms.at(at);
    const Rule<S>& rule = rules_[static_cast<size_t>(best_rule)];
    Monomial cofactor = mono_div(at, rule.lhs);
    cur.terms.erase(at);
    cur += Poly<S>::monomial(*sig_, cofactor, coeff) * rule.rhs;
    if (chain) chain->push_back(cur);
  }
}

template class RewriteSystem<Coeff>;
template class RewriteSystem<FixedScalar>;

namespace {

std::vector<Rule<Coeff>> bu2_rules() {
  auto R = [](const char* name, const char* lhs, const char* rhs) {
    return Rule<Coeff>{name, parse_monomial(sig_P(), lhs),
                       parse_poly_h(sig_P(), rhs)};
  };
  return {
      R("R1", "z0*z1*z2", "x"),
      R("R2", "z1*cxl", "(1-k)*z0*z2*cl + e^2"),
      R("R3", "z0^2*z2^2*cl", "x*cxl + e^2*z0*z2"),
      R("R4", "z2^2*cxw", "(1-k)*z0^2*cw + e^2*cxl"),
      R("R5", "z0^3*z1*cw", "x*z2*cxw - e^2*z0^2*z2*cl + e^4*z0"),
      R("R6", "z0^4*cl*cw", "x*cxl*cxw + e^2*z0^2*cl*cxl - e^2*z0*z2*cxw"),
  };
}

}  // namespace

const RewriteSystem<Coeff>& rewrite_bu2() {
  static const RewriteSystem<Coeff> rs(sig_P(), bu2_rules());
  return rs;
}

const RewriteSystem<FixedScalar>& rewrite_bu2_phi() {
  static const RewriteSystem<FixedScalar> rs = [] {
    std::vector<Rule<FixedScalar>> rules;
    for (const auto& r : bu2_rules())
      rules.push_back({r.name, r.lhs,
                       map_coefficients<FixedScalar>(r.rhs, coeff_phi)});
    return RewriteSystem<FixedScalar>(sig_P(), std::move(rules));
  }();
  return rs;
}

std::vector<Overlap> confluence_overlaps() {
  const auto& rs = rewrite_bu2();
  const auto& rules = rs.rules();
  std::vector<Overlap> out;
  for (size_t i = 0; i < rules.size(); ++i) {
    for (size_t j = i + 1; j < rules.size(); ++j) {
      Overlap o;
      o.rule_a = rules[i].name;
      o.rule_b = rules[j].name;
      o.lcm = mono_lcm(rules[i].lhs, rules[j].lhs);
      o.coprime = mono_coprime(rules[i].lhs, rules[j].lhs);
      auto one_step = [&](const Rule<Coeff>& r) {
        return Poly<Coeff>::monomial(sig_P(), mono_div(o.lcm, r.lhs),
                                     Coeff::one()) *
               r.rhs;
      };
      o.chain_a.push_back(one_step(rules[i]));
      o.nf_a = rs.normal_form(o.chain_a.front(), &o.chain_a);
      o.chain_b.push_back(one_step(rules[j]));
      o.nf_b = rs.normal_form(o.chain_b.front(), &o.chain_b);
      o.confluent = o.nf_a == o.nf_b;
      out.push_back(std::move(o));
    }
  }
  return out;
}

// For a page {page + RO(C2)}, a monomial z0^a0 z1^a1 z2^a2 cl^p cxl^q cw^r
// cxw^s has O-vector (a0, a1, a2) + (q+2s, p+r+s, q+2r) =: z + off(p,q,r,s).
// Matching the page's O-vector M up to the diagonal shift t forces
// z_i = M_i + t - off_i, and min z_i = 0 (otherwise z0*z1*z2 divides and R1
// applies), i.e. t = max_i(off_i - M_i).  So the basis monomials on the page
// are indexed by (p,q,r,s) alone.
//
// Search box: with the canonical representative (A, B, M, M2 = 0) and the
// position bound a <= a_max, one checks case by case over which z_i vanishes
// and which divisibility exclusions are active that each of p, q, r, s is at
// most roughly (A + a_max) + 4 max|M_i|; the cap below is that with slack.
std::vector<BasisElement> enumerate_basis(const Grading& page, int a_max) {
  if (page.n_omegas() != 3)
    throw Error("enumerate_basis: expected a BU(2) grading");
  const auto& rs = rewrite_bu2();
  const int A = page.a();
  const std::array<int, 3> M = {page.m()[0], page.m()[1], page.m()[2]};
  int max_m = std::max({std::abs(M[0]), std::abs(M[1]), std::abs(M[2])});
  const int cap = std::max(0, A + a_max) + 4 * max_m + 8;

  std::vector<BasisElement> out;
  for (int p = 0; p <= cap; ++p)
    for (int q = 0; q <= cap; ++q)
      for (int r = 0; r <= cap; ++r)
        for (int s = 0; s <= cap; ++s) {
          std::array<int, 3> off = {q + 2 * s, p + r + s, q + 2 * r};
          int t = std::max({off[0] - M[0], off[1] - M[1], off[2] - M[2]});
          Monomial m = {M[0] + t - off[0],
                        M[1] + t - off[1],
                        M[2] + t - off[2],
                        p,
                        q,
                        r,
                        s};
          if (!rs.is_basis_monomial(m)) continue;
          Grading delta = monomial_grading(sig_P(), m) - page;
          RO2 pos = delta.ro2_part();
          if (pos.a > a_max) continue;
          out.push_back({std::move(m), pos});
        }
  std::sort(out.begin(), out.end(), [](const BasisElement& x,
                                       const BasisElement& y) {
    if (x.pos != y.pos) return x.pos < y.pos;
    return mono_order_less(x.m, y.m);
  });
  return out;
}

std::vector<PageCell> page_cells(const Grading& page, int a_max) {
  std::vector<PageCell> cells;
  for (auto& el : enumerate_basis(page, a_max)) {
    if (cells.empty() || !(cells.back().pos == el.pos))
      cells.push_back({el.pos, {}});
    cells.back().monomials.push_back(el.m);
  }
  return cells;
}

}  // namespace bu2cc
