// maps.cpp — generator tables of eta, rho, phibar and the section psi.
#include "bu2cc/maps.hpp"

#include <array>

#include "bu2cc/expr.hpp"

namespace bu2cc {

Triple<Coeff> eta_triple(const std::string& t0, const std::string& t1,
                         const std::string& t2) {
  return {parse_poly_h(sig_eta0(), t0), parse_poly_h(sig_eta1(), t1),
          parse_poly_h(sig_eta2(), t2)};
}

Triple<FixedScalar> fixed_triple(const std::string& t0, const std::string& t1,
                                 const std::string& t2) {
  return {parse_poly_fixed(sig_eta0(), t0), parse_poly_fixed(sig_eta1(), t1),
          parse_poly_fixed(sig_eta2(), t2)};
}

namespace {

// Images of z0, z1, z2, cl, cxl, cw, cxw on the three fixed components.
// Away from its own component each zeta becomes invertible, and over its own
// component the missing Euler class is filled in by xi through the relation
// z0 z1 z2 = xi.
std::array<Triple<Coeff>, 7> make_eta() {
  return {
      eta_triple("x*z1^-1*z2^-1", "z0", "z0"),
      eta_triple("z1", "x*z0^-1*z2^-1", "z1"),
      eta_triple("z2", "z2", "x*z0^-1*z1^-1"),
      eta_triple("c1*z1", "(e^2 + x*(x1 + x2))*z0^-1*z2^-1", "c1*z1"),
      eta_triple("(e^2 + x*c1)*z1^-1", "(x1 + x2)*z0*z2",
                 "(e^2 + x*c1)*z1^-1"),
      eta_triple("c2*z1*z2^2", "x1*(e^2 + x*x2)*z0^-1*z2",
                 "(e^4 + e^2*x*c1 + x^2*c2)*z0^-2*z1^-1"),
      eta_triple("(e^4 + e^2*x*c1 + x^2*c2)*z1^-1*z2^-2",
                 "x2*(e^2 + x*x1)*z0*z2^-1", "c2*z0^2*z1"),
  };
}

std::array<Poly<NoneqScalar>, 7> make_rho() {
  auto P = [](const char* s) { return parse_poly_noneq(sig_rho(), s); };
  return {P("z0"),       P("z1"),       P("z2"),      P("z1*c1"),
          P("z0*z2*c1"), P("z1*z2^2*c2"), P("z0^2*z1*c2")};
}

std::array<Triple<FixedScalar>, 7> make_phibar() {
  return {
      fixed_triple("0", "z0", "z0"),
      fixed_triple("z1", "0", "z1"),
      fixed_triple("z2", "z2", "0"),
      fixed_triple("c1*z1", "e^2*z0^-1*z2^-1", "c1*z1"),
      fixed_triple("e^2*z1^-1", "(x1 + x2)*z0*z2", "e^2*z1^-1"),
      fixed_triple("c2*z1*z2^2", "e^2*x1*z0^-1*z2", "e^4*z0^-2*z1^-1"),
      fixed_triple("e^4*z1^-1*z2^-2", "e^2*x2*z0*z2^-1", "c2*z0^2*z1"),
  };
}

}  // namespace

const Triple<Coeff>& eta_gen(int i) {
  static const std::array<Triple<Coeff>, 7> t = make_eta();
  return t.at(static_cast<size_t>(i));
}
const Poly<NoneqScalar>& rho_gen(int i) {
  static const std::array<Poly<NoneqScalar>, 7> t = make_rho();
  return t.at(static_cast<size_t>(i));
}
const Triple<FixedScalar>& phibar_gen(int i) {
  static const std::array<Triple<FixedScalar>, 7> t = make_phibar();
  return t.at(static_cast<size_t>(i));
}

namespace {

template <class S>
Triple<S> unit_zero(const Triple<S>& unit) {
  return {Poly<S>::zero(*unit.c0.sig), Poly<S>::zero(*unit.c1.sig),
          Poly<S>::zero(*unit.c2.sig)};
}
template <class S>
Poly<S> unit_zero(const Poly<S>& unit) {
  return Poly<S>::zero(*unit.sig);
}

// Multiplicative extension over a generator-image table.
template <class S, class Img, class MulUnit, class ScalarPush>
Img extend(const Poly<S>& p, const Img& unit, MulUnit&& image_of,
           ScalarPush&& push) {
  Img total = unit_zero(unit);
  for (auto& [m, c] : p.terms) {
    Img term = unit;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) term *= image_of(static_cast<int>(i)).pow(m[i]);
    total += push(c, std::move(term));
  }
  return total;
}

Triple<Coeff> eta_unit() {
  return {Poly<Coeff>::one(sig_eta0()), Poly<Coeff>::one(sig_eta1()),
          Poly<Coeff>::one(sig_eta2())};
}
Triple<FixedScalar> phibar_unit() {
  return {Poly<FixedScalar>::one(sig_eta0()),
          Poly<FixedScalar>::one(sig_eta1()),
          Poly<FixedScalar>::one(sig_eta2())};
}

}  // namespace

Triple<Coeff> eta(const Poly<Coeff>& p) {
  if (p.sig != &sig_P()) throw Error("eta: expected a BU(2) class");
  return extend(
      p, eta_unit(), [](int i) -> const Triple<Coeff>& { return eta_gen(i); },
      [](const Coeff& c, Triple<Coeff> t) {
        return Triple<Coeff>{t.c0.scaled(c), t.c1.scaled(c), t.c2.scaled(c)};
      });
}

Poly<NoneqScalar> rho_canonicalize(Poly<NoneqScalar> p) {
  const Signature& sig = *p.sig;
  int i0 = sig.index("z0"), i1 = sig.index("z1"), i2 = sig.index("z2");
  Poly<NoneqScalar> out(sig);
  for (auto& [m, c] : p.terms) {
    for (auto& [power, val] : c.terms()) {
      // iota^power = iota^rem * (z0 z1 z2)^shift with rem in {0, 1}.
      int shift = power >= 0 ? power / 2 : -((-power + 1) / 2);
      int rem = power - 2 * shift;
      Monomial mm = m;
      mm[static_cast<size_t>(i0)] += shift;
      mm[static_cast<size_t>(i1)] += shift;
      mm[static_cast<size_t>(i2)] += shift;
      out.add_term(std::move(mm), NoneqScalar::unit(rem, val));
    }
  }
  return out;
}

Poly<NoneqScalar> rho(const Poly<Coeff>& p) {
  if (p.sig != &sig_P()) throw Error("rho: expected a BU(2) class");
  Poly<NoneqScalar> img = extend(
      p, Poly<NoneqScalar>::one(sig_rho()),
      [](int i) -> const Poly<NoneqScalar>& { return rho_gen(i); },
      [](const Coeff& c, Poly<NoneqScalar> t) {
        return t.scaled(coeff_rho(c));
      });
  return rho_canonicalize(std::move(img));
}

Poly<FixedScalar> to_fixed(const Poly<Coeff>& p) {
  return map_coefficients<FixedScalar>(p, coeff_phi);
}

Triple<FixedScalar> phibar(const Poly<FixedScalar>& p) {
  if (p.sig != &sig_P()) throw Error("phibar: expected a BU(2) class");
  return extend(
      p, phibar_unit(),
      [](int i) -> const Triple<FixedScalar>& { return phibar_gen(i); },
      [](const FixedScalar& c, Triple<FixedScalar> t) {
        return Triple<FixedScalar>{t.c0.scaled(c), t.c1.scaled(c),
                                   t.c2.scaled(c)};
      });
}

Triple<FixedScalar> phibar_of(const Poly<Coeff>& p) {
  return phibar(to_fixed(p));
}

Triple<FixedScalar> triple_phi(const Triple<Coeff>& t) {
  return {map_coefficients<FixedScalar>(t.c0, coeff_phi),
          map_coefficients<FixedScalar>(t.c1, coeff_phi),
          map_coefficients<FixedScalar>(t.c2, coeff_phi)};
}

namespace {

// e = 1, zeta = 1 on one component; keeps only the c/x exponents.
Poly<long long> augment(const Poly<FixedScalar>& p, const Signature& target) {
  Poly<long long> out(target);
  for (auto& [m, c] : p.terms) {
    Monomial mm(target.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      int j = target.index(p.sig->gens[i].name);
      if (j >= 0) mm[static_cast<size_t>(j)] = m[i];
      // zetas are dropped: they are set to 1
    }
    out.add_term(std::move(mm), c.at_one());
  }
  return out;
}

}  // namespace

Triple<long long> fixed_sets(const Poly<Coeff>& p) {
  Triple<FixedScalar> t = phibar_of(p);
  return {augment(t.c0, sig_fixed0()), augment(t.c1, sig_fixed1()),
          augment(t.c2, sig_fixed2())};
}

const std::vector<PsiEntry>& psi_table() {
  static const std::vector<PsiEntry> table = [] {
    const auto& rs = rewrite_bu2_phi();
    auto val = [&](const std::string& s) {
      return rs.normal_form(parse_poly_fixed(sig_P(), s));
    };
    std::vector<PsiEntry> t;
    // Idempotent units of the three components.
    Poly<FixedScalar> u0 = val("e^-6*z1^2*z2^2*cxl*cxw");
    Poly<FixedScalar> u1 = val("e^-2*z0*z2*cl");
    Poly<FixedScalar> u2 = val("e^-6*z0^2*z1^2*cxl*cw");
    t.push_back({"(1,0,0)", fixed_triple("1", "0", "0"), u0});
    t.push_back({"(0,1,0)", fixed_triple("0", "1", "0"), u1});
    t.push_back({"(0,0,1)", fixed_triple("0", "0", "1"), u2});
    // Positive zeta rows: multiply the component unit by the zeta itself.
    auto zmul = [&](const char* z, const Poly<FixedScalar>& u) {
      return rs.normal_form(parse_poly_fixed(sig_P(), z) * u);
    };
    t.push_back({"(z1,0,0)", fixed_triple("z1", "0", "0"), zmul("z1", u0)});
    t.push_back({"(z2,0,0)", fixed_triple("z2", "0", "0"), zmul("z2", u0)});
    t.push_back({"(0,z0,0)", fixed_triple("0", "z0", "0"), zmul("z0", u1)});
    t.push_back({"(0,z2,0)", fixed_triple("0", "z2", "0"), zmul("z2", u1)});
    t.push_back({"(0,0,z0)", fixed_triple("0", "0", "z0"), zmul("z0", u2)});
    t.push_back({"(0,0,z1)", fixed_triple("0", "0", "z1"), zmul("z1", u2)});
    // Inverse zeta rows.
    t.push_back({"(z1^-1,0,0)", fixed_triple("z1^-1", "0", "0"),
                 val("e^-6*z1*z2^2*cxl*cxw")});
    t.push_back({"(z2^-1,0,0)", fixed_triple("z2^-1", "0", "0"),
                 val("e^-6*z1^2*z2*cxl*cxw")});
    t.push_back({"(0,z0^-1,0)", fixed_triple("0", "z0^-1", "0"),
                 val("e^-2*z2*cl*(1 - e^-2*z1*cxl)")});
    t.push_back({"(0,z2^-1,0)", fixed_triple("0", "z2^-1", "0"),
                 val("e^-2*z0*cl*(1 - e^-2*z1*cxl)")});
    t.push_back({"(0,0,z0^-1)", fixed_triple("0", "0", "z0^-1"),
                 val("e^-6*z0*z1^2*cxl*cw")});
    t.push_back({"(0,0,z1^-1)", fixed_triple("0", "0", "z1^-1"),
                 val("e^-6*z0^2*z1*cxl*cw")});
    // Polynomial generators of the components.
    auto prodval = [&](const std::string& s, const Poly<FixedScalar>& u) {
      return rs.normal_form(parse_poly_fixed(sig_P(), s) * u);
    };
    t.push_back({"(c1,0,0)", fixed_triple("c1", "0", "0"),
                 prodval("e^-2*cl*cxl", u0)});
    t.push_back({"(c2,0,0)", fixed_triple("c2", "0", "0"),
                 prodval("e^-4*cw*cxw", u0)});
    t.push_back({"(0,x1,0)", fixed_triple("0", "x1", "0"),
                 prodval("e^-2*z0*cw", val("e^-2*z0*cl*(1 - e^-2*z1*cxl)"))});
    t.push_back({"(0,x2,0)", fixed_triple("0", "x2", "0"),
                 prodval("e^-2*z2*cxw", val("e^-2*z2*cl*(1 - e^-2*z1*cxl)"))});
    t.push_back({"(0,0,c1)", fixed_triple("0", "0", "c1"),
                 prodval("e^-2*cl*cxl", u2)});
    t.push_back({"(0,0,c2)", fixed_triple("0", "0", "c2"),
                 prodval("e^-4*cw*cxw", u2)});
    return t;
  }();
  return table;
}

}  // namespace bu2cc
