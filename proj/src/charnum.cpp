#include "bu2cc/charnum.hpp"

#include <fstream>

#include "bu2cc/expr.hpp"
#include "bu2cc/maps.hpp"
#include "json.hpp"

namespace bu2cc {

std::vector<BasisElement> bu1_omega_basis() {
  // The beginning of the basis of the BU(1) cohomology in the gradings
  // omega(1) + RO(C_2) = Omega_1 + RO(C_2); positions are relative to the
  // page representative Omega_1.
  const Signature& sig = sig_bu1();
  Grading page = Grading(0, 0, {0, 1});
  std::vector<BasisElement> out;
  for (const char* s :
       {"z1", "cw", "z0*cw^2", "cw^2*cxw", "z0*cw^3*cxw"}) {
    Monomial m = parse_monomial(sig, s);
    out.push_back({m, (monomial_grading(sig, m) - page).ro2_part()});
  }
  return out;
}

namespace {

// Keep the classes whose pairing against a fundamental class in grading
// `dim` can be nonzero: position (relative to dim) with a <= 0 and
// a + b >= 0, the positive wedge of the cohomology of a point.
std::vector<BasisElement> wedge_filter(std::vector<BasisElement> all) {
  std::vector<BasisElement> out;
  for (auto& be : all)
    if (be.pos.a <= 0 && be.pos.a + be.pos.b >= 0) out.push_back(be);
  return out;
}

void sort_classes(const Signature&, std::vector<BasisElement>& v) {
  std::sort(v.begin(), v.end(), [](const BasisElement& x, const BasisElement& y) {
    if (x.pos.a != y.pos.a) return x.pos.a < y.pos.a;
    if (x.pos.b != y.pos.b) return x.pos.b < y.pos.b;
    // Within a position: order-greatest first, matching printed term order.
    return mono_order_less(y.m, x.m);
  });
}

}  // namespace

std::vector<BasisElement> relevant_classes_bu1(const Grading& dim) {
  const Signature& sig = sig_bu1();
  std::vector<BasisElement> all;
  for (auto& be : bu1_omega_basis()) {
    Grading rel = monomial_grading(sig, be.m) - dim;
    if (!rel.is_ro2()) throw Error("relevant_classes: class off the page");
    all.push_back({be.m, rel.ro2_part()});
  }
  sort_classes(sig, all);
  return wedge_filter(std::move(all));
}

std::vector<BasisElement> relevant_classes(const Grading& dim) {
  if (dim.n_omegas() == 2) return relevant_classes_bu1(dim);
  // Positions from enumerate_basis are already relative to dim.
  std::vector<BasisElement> all = enumerate_basis(dim, 0);
  sort_classes(sig_P(), all);
  return wedge_filter(std::move(all));
}

Poly<Coeff> manifold_mul(const Manifold& x, const Poly<Coeff>& p,
                         const Poly<Coeff>& q) {
  Poly<Coeff> r = p * q;
  if (x.nilpotency > 0) {
    Poly<Coeff> t(*x.sig);
    for (auto& [m, c] : r.terms) {
      bool dead = false;
      for (size_t i = 0; i < m.size(); ++i)
        if (!x.sig->gens[i].invertible && m[i] >= x.nilpotency) dead = true;
      if (!dead) t.add_term(m, c);
    }
    return t;
  }
  return r;
}

Poly<Coeff> manifold_pow(const Manifold& x, const Poly<Coeff>& p, int k) {
  if (k < 0) throw Error("manifold_pow: negative power");
  if (k == 0) return Poly<Coeff>::one(*x.sig);
  for (const auto& fact : x.product_facts) {
    if (fact.power >= 2 && k >= fact.power && p == fact.element) {
      Poly<Coeff> r = manifold_pow(x, fact.value, k / fact.power);
      for (int j = 0; j < k % fact.power; ++j) r = manifold_mul(x, r, p);
      return r;
    }
  }
  Poly<Coeff> r = p;
  for (int j = 1; j < k; ++j) r = manifold_mul(x, r, p);
  return r;
}

Poly<Coeff> tangent_pullback(const Manifold& x, const Monomial& cls) {
  const Signature& src = x.source == "bu1" ? sig_bu1() : sig_P();
  if (cls.size() != src.size())
    throw Error("tangent_pullback: class is not a " + x.source + " monomial");
  if (x.has_class_table()) {
    for (auto& [m, v] : x.class_table)
      if (m == cls) return v;
    throw Error("tangent_pullback: class " + monomial_str(src, cls) +
                " is not in the stored pullback table of " + x.name);
  }
  Poly<Coeff> r = Poly<Coeff>::one(*x.sig);
  for (size_t i = 0; i < cls.size(); ++i) {
    if (cls[i] == 0) continue;
    const Poly<Coeff>* img = nullptr;
    for (auto& [name, v] : x.gen_images)
      if (name == src.gens[i].name) img = &v;
    if (!img)
      throw Error("tangent_pullback: no image of " + src.gens[i].name +
                  " is stored for " + x.name);
    r = manifold_mul(x, r, manifold_pow(x, *img, cls[i]));
  }
  return r;
}

Coeff evaluate(const Manifold& x, const Poly<Coeff>& p) {
  if (p.sig != x.sig.get()) throw Error("evaluate: wrong ring");
  Coeff total = Coeff::zero();
  for (auto& [m, c] : p.terms) {
    bool found = false;
    for (auto& [bm, val] : x.evaluations)
      if (bm == m) {
        total += c * val;
        found = true;
        break;
      }
    if (!found)
      throw Error("element outside evaluation basis span: " +
                  monomial_str(*x.sig, m) + " on " + x.name);
  }
  return total;
}

Coeff charnum(const Manifold& x, const Monomial& cls) {
  return evaluate(x, tangent_pullback(x, cls));
}

DistinguishResult bordism_distinguish(const Manifold& a, const Manifold& b) {
  if (a.source != b.source || !(a.dim == b.dim))
    throw Error("bordism_distinguish: dimension mismatch");
  const Signature& src = a.source == "bu1" ? sig_bu1() : sig_P();
  DistinguishResult r;
  for (const auto& be : relevant_classes(a.dim)) {
    Coeff ca = charnum(a, be.m);
    Coeff cb = charnum(b, be.m);
    if (!(ca == cb)) {
      r.distinguished = true;
      r.witness = monomial_str(src, be.m);
      r.value_a = ca;
      r.value_b = cb;
      return r;
    }
  }
  return r;
}

namespace {

using nlohmann::json;

Grading json_grading(const json& j, int n_omegas) {
  return parse_grading(j.get<std::string>(), n_omegas);
}

}  // namespace

Manifold load_manifold(const std::string& data_dir, const std::string& name) {
  std::string path = data_dir + "/manifolds/" + name + ".json";
  std::ifstream in(path);
  if (!in) throw Error("manifold fixture not found: " + path);
  json j = json::parse(in);

  Manifold x;
  x.name = j.at("name").get<std::string>();
  x.source = j.at("source").get<std::string>();
  if (x.source != "bu1" && x.source != "bu2")
    throw Error("manifold " + name + ": unknown source ring");
  const Signature& src = x.source == "bu1" ? sig_bu1() : sig_P();
  x.dim = json_grading(j.at("dim"), src.n_omegas);

  int nm = j.at("n_omegas").get<int>();
  auto sig = std::make_unique<Signature>();
  sig->id = "X:" + x.name;
  sig->n_omegas = nm;
  for (const auto& g : j.at("generators")) {
    GenInfo gi;
    gi.name = g.at("name").get<std::string>();
    gi.grading = json_grading(g.at("grading"), nm);
    gi.invertible = g.value("invertible", false);
    sig->gens.push_back(std::move(gi));
  }
  x.sig = std::move(sig);
  x.nilpotency = j.value("nilpotency", 0);

  Grading fund = json_grading(j.at("fund"), nm);

  // tau*(Omega_i) of the source group, for homogeneity validation of the
  // stored generator images.
  std::vector<Grading> omega_images;
  if (j.contains("omega_images")) {
    for (const auto& o : j.at("omega_images"))
      omega_images.push_back(json_grading(o, nm));
    if (static_cast<int>(omega_images.size()) != src.n_omegas)
      throw Error("manifold " + name + ": omega_images arity");
    Grading total(nm);
    for (auto& g : omega_images) total = total + g;
    if (!(total == Grading::ro2(RO2{-2, 2}, nm)))
      throw Error("manifold " + name +
                  ": omega images violate the Omega relation");
  }
  auto restrict_grading = [&](const Grading& g) {
    Grading r = Grading::ro2(RO2{g.a(), g.b()}, nm);
    for (int i = 0; i < src.n_omegas; ++i)
      if (g.m()[static_cast<size_t>(i)] != 0)
        r = r + omega_images[static_cast<size_t>(i)] *
                    g.m()[static_cast<size_t>(i)];
    return r;
  };

  if (j.contains("gen_images")) {
    for (auto& [gname, val] : j.at("gen_images").items()) {
      int gi = src.index(gname);
      if (gi < 0) throw Error("manifold " + name + ": unknown class " + gname);
      Poly<Coeff> img = parse_poly_h(*x.sig, val.get<std::string>());
      if (!img.is_zero() && !omega_images.empty()) {
        auto g = img.grading();
        if (!g || !(*g == restrict_grading(src.gens[static_cast<size_t>(gi)]
                                               .grading)))
          throw Error("manifold " + name + ": image of " + gname +
                      " has the wrong grading");
      }
      x.gen_images.emplace_back(gname, std::move(img));
    }
  }

  if (j.contains("class_table")) {
    for (auto& [cls, val] : j.at("class_table").items()) {
      Monomial m = parse_monomial(src, cls);
      Poly<Coeff> img = parse_poly_h(*x.sig, val.get<std::string>());
      if (!img.is_zero()) {
        // tau*(omega(n) + r) = fund + r for r in RO(C_2).
        auto g = img.grading();
        Grading rel = monomial_grading(src, m) - x.dim;
        if (!g || !rel.is_ro2() || !((*g - fund).ro2_part() == rel.ro2_part()))
          throw Error("manifold " + name + ": pullback of " + cls +
                      " has the wrong grading");
      }
      x.class_table.emplace_back(std::move(m), std::move(img));
    }
  }

  if (j.contains("product_facts")) {
    for (const auto& f : j.at("product_facts")) {
      Manifold::ProductFact pf;
      pf.element = parse_poly_h(*x.sig, f.at("element").get<std::string>());
      pf.power = f.at("power").get<int>();
      pf.value = parse_poly_h(*x.sig, f.at("value").get<std::string>());
      if (pf.power < 2) throw Error("manifold " + name + ": bad product fact");
      x.product_facts.push_back(std::move(pf));
    }
  }

  for (auto& [mono, val] : j.at("evaluations").items()) {
    Monomial m = parse_monomial(*x.sig, mono);
    Coeff c = parse_coeff(val.get<std::string>());
    if (!c.is_zero()) {
      // <gamma-class, fund-class> lands in H^(gamma - fund).
      auto cg = c.grading();
      Grading rel = monomial_grading(*x.sig, m) - fund;
      if (!cg || !rel.is_ro2() || !(*cg == rel.ro2_part()))
        throw Error("manifold " + name + ": evaluation of " + mono +
                    " has the wrong grading");
    }
    x.evaluations.emplace_back(std::move(m), std::move(c));
  }

  return x;
}

}  // namespace bu2cc
