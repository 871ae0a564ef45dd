// ring.cpp — monomial helpers and the fixed signatures.
#include "bu2cc/ring.hpp"

#include <sstream>

namespace bu2cc {

Grading monomial_grading(const Signature& sig, const Monomial& m) {
  Grading g(sig.n_omegas);
  if (m.size() != sig.size()) throw Error("monomial_grading: length mismatch");
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) g += sig.gens[i].grading * m[i];
  return g;
}

std::string monomial_str(const Signature& sig, const Monomial& m) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (any) os << "*";
    os << sig.gens[i].name;
    if (m[i] != 1) os << "^" << m[i];
    any = true;
  }
  return any ? os.str() : "1";
}

Monomial mono_mul(const Monomial& x, const Monomial& y) {
  Monomial r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Monomial mono_div(const Monomial& x, const Monomial& y) {
  Monomial r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& x, const Monomial& y) {
  Monomial r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(x[i], y[i]);
  return r;
}

bool mono_coprime(const Monomial& x, const Monomial& y) {
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0 && y[i] > 0) return false;
  return true;
}

bool mono_is_one(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](int v) { return v == 0; });
}

namespace {

Grading G(int a, int b, std::vector<int> m) { return Grading(a, b, std::move(m)); }

Signature make_P() {
  Signature s;
  s.id = "P";
  s.n_omegas = 3;
  s.gens = {
      {"z0", G(0, 0, {1, 0, 0}), false},
      {"z1", G(0, 0, {0, 1, 0}), false},
      {"z2", G(0, 0, {0, 0, 1}), false},
      {"cl", G(2, 0, {0, 1, 0}), false},
      {"cxl", G(2, 0, {1, 0, 1}), false},
      {"cw", G(4, 0, {0, 1, 2}), false},
      {"cxw", G(4, 0, {2, 1, 0}), false},
  };
  return s;
}

Signature make_eta(int comp) {
  Signature s;
  s.id = "eta" + std::to_string(comp);
  s.n_omegas = 3;
  switch (comp) {
    case 0:
      s.gens = {{"c1", G(2, 0, {0, 0, 0}), false},
                {"c2", G(4, 0, {0, 0, 0}), false},
                {"z1", G(0, 0, {0, 1, 0}), true},
                {"z2", G(0, 0, {0, 0, 1}), true}};
      break;
    case 1:
      s.gens = {{"x1", G(2, 0, {0, 0, 0}), false},
                {"x2", G(2, 0, {0, 0, 0}), false},
                {"z0", G(0, 0, {1, 0, 0}), true},
                {"z2", G(0, 0, {0, 0, 1}), true}};
      break;
    case 2:
      s.gens = {{"c1", G(2, 0, {0, 0, 0}), false},
                {"c2", G(4, 0, {0, 0, 0}), false},
                {"z0", G(0, 0, {1, 0, 0}), true},
                {"z1", G(0, 0, {0, 1, 0}), true}};
      break;
  }
  return s;
}

Signature make_rho() {
  Signature s;
  s.id = "rho";
  s.n_omegas = 3;
  s.gens = {{"c1", G(2, 0, {0, 0, 0}), false},
            {"c2", G(4, 0, {0, 0, 0}), false},
            {"z0", G(0, 0, {1, 0, 0}), true},
            {"z1", G(0, 0, {0, 1, 0}), true},
            {"z2", G(0, 0, {0, 0, 1}), true}};
  return s;
}

Signature make_bu1() {
  Signature s;
  s.id = "BU1";
  s.n_omegas = 2;
  s.gens = {{"z0", Grading::omega(0, 2), false},
            {"z1", Grading::omega(1, 2), false},
            {"cw", Grading(2, 0, {0, 1}), false},
            {"cxw", Grading(2, 0, {1, 0}), false}};
  return s;
}

Signature make_fixed(int comp) {
  Signature s;
  s.id = "fixed" + std::to_string(comp);
  s.n_omegas = 3;
  if (comp == 1) {
    s.gens = {{"x1", G(2, 0, {0, 0, 0}), false},
              {"x2", G(2, 0, {0, 0, 0}), false}};
  } else {
    s.gens = {{"c1", G(2, 0, {0, 0, 0}), false},
              {"c2", G(4, 0, {0, 0, 0}), false}};
  }
  return s;
}

}  // namespace

const Signature& sig_P() {
  static const Signature s = make_P();
  return s;
}
const Signature& sig_eta0() {
  static const Signature s = make_eta(0);
  return s;
}
const Signature& sig_eta1() {
  static const Signature s = make_eta(1);
  return s;
}
const Signature& sig_eta2() {
  static const Signature s = make_eta(2);
  return s;
}
const Signature& sig_rho() {
  static const Signature s = make_rho();
  return s;
}
const Signature& sig_bu1() {
  static const Signature s = make_bu1();
  return s;
}
const Signature& sig_fixed0() {
  static const Signature s = make_fixed(0);
  return s;
}
const Signature& sig_fixed1() {
  static const Signature s = make_fixed(1);
  return s;
}
const Signature& sig_fixed2() {
  static const Signature s = make_fixed(2);
  return s;
}

}  // namespace bu2cc
