// ring.hpp — graded polynomial/Laurent rings over a scalar coefficient ring.
//
// A Signature fixes an ordered list of generators with gradings and
// invertibility flags; a Monomial is the exponent vector (negative exponents
// only on invertible generators).  Poly<S> is a finitely supported map
// Monomial -> S for a scalar ring S (the H fragment Coeff, the Laurent rings
// of the restriction targets, or plain integers).
//
// The main ring P realized here is the RO(Pi)-graded cohomology of BU(2):
//
//   P = H[z0, z1, z2, cl, cxl, cw, cxw] / (three relations, see rewrite.hpp)
//
// with z_i the Euler classes of the tautological summands over the three
// fixed components (gradings O_i), cl/cxl the two middle characteristic
// classes (gradings 2+O1 and 2+O0+O2) and cw/cxw the top ones (gradings
// 4+O1+2O2 and 4+2O0+O1).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bu2cc/coeff.hpp"
#include "bu2cc/grading.hpp"

namespace bu2cc {

struct GenInfo {
  std::string name;
  Grading grading;
  bool invertible = false;
};

struct Signature {
  std::string id;
  int n_omegas = 3;
  std::vector<GenInfo> gens;

  int index(std::string_view name) const {
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i].name == name) return static_cast<int>(i);
    return -1;
  }
  size_t size() const { return gens.size(); }
};

using Monomial = std::vector<int>;

Grading monomial_grading(const Signature& sig, const Monomial& m);
std::string monomial_str(const Signature& sig, const Monomial& m);
// Componentwise sum / difference of exponent vectors.
Monomial mono_mul(const Monomial& x, const Monomial& y);
Monomial mono_div(const Monomial& x, const Monomial& y);  // x / y, may go <0
bool mono_divides(const Monomial& d, const Monomial& m);  // d | m, all >= 0
Monomial mono_lcm(const Monomial& x, const Monomial& y);
bool mono_coprime(const Monomial& x, const Monomial& y);
bool mono_is_one(const Monomial& m);

// ---------------------------------------------------------------- scalars

inline std::optional<RO2> scalar_grading(const Coeff& c) { return c.grading(); }
template <char V>
std::optional<RO2> scalar_grading(const Laurent<V>& c) {
  return c.grading();
}
inline std::optional<RO2> scalar_grading(long long) { return RO2{0, 0}; }

template <class S>
struct ScalarOps {
  static S one() { return S::one(); }
  static bool is_zero(const S& v) { return v.is_zero(); }
  static std::string str(const S& v) { return v.str(); }
};
template <>
struct ScalarOps<long long> {
  static long long one() { return 1; }
  static bool is_zero(long long v) { return v == 0; }
  static std::string str(long long v) { return std::to_string(v); }
};

// ------------------------------------------------------------------- Poly

template <class S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Signature& s) : sig(&s) {}

  static Poly zero(const Signature& s) { return Poly(s); }
  static Poly scalar(const Signature& s, S c) {
    Poly r(s);
    r.add_term(Monomial(s.size(), 0), std::move(c));
    return r;
  }
  static Poly one(const Signature& s) {
    return scalar(s, ScalarOps<S>::one());
  }
  static Poly monomial(const Signature& s, Monomial m, S c) {
    Poly r(s);
    r.add_term(std::move(m), std::move(c));
    return r;
  }
  static Poly generator(const Signature& s, int i, int exp = 1) {
    Monomial m(s.size(), 0);
    if (i < 0 || static_cast<size_t>(i) >= s.size())
      throw Error("Poly::generator: bad index");
    if (exp < 0 && !s.gens[static_cast<size_t>(i)].invertible)
      throw Error("Poly::generator: " + s.gens[static_cast<size_t>(i)].name +
                  " is not invertible");
    m[static_cast<size_t>(i)] = exp;
    return monomial(s, std::move(m), ScalarOps<S>::one());
  }

  const Signature* sig = nullptr;
  std::map<Monomial, S> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(Monomial m, S c) {
    if (ScalarOps<S>::is_zero(c)) return;
    check_exponents(m);
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (ScalarOps<S>::is_zero(it->second)) terms.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_sig(o);
    for (auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_sig(o);
    for (auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  Poly operator-() const {
    Poly r(*sig);
    for (auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
  }
  friend Poly operator*(const Poly& x, const Poly& y) {
    x.check_sig(y);
    Poly r(*x.sig);
    for (auto& [mx, cx] : x.terms)
      for (auto& [my, cy] : y.terms) r.add_term(mono_mul(mx, my), cx * cy);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const S& c) const {
    Poly r(*sig);
    for (auto& [m, v] : terms) r.add_term(m, v * c);
    return r;
  }
  Poly pow(int k) const {
    if (k < 0) {
      if (terms.size() != 1) throw Error("Poly::pow: negative power");
      // Invert a unit monomial.
      auto& [m, c] = *terms.begin();
      Monomial mi(m.size());
      for (size_t i = 0; i < m.size(); ++i) mi[i] = m[i] * k;
      S ci = inverse_scalar_pow(c, k);
      return monomial(*sig, std::move(mi), std::move(ci));
    }
    Poly r = one(*sig);
    for (int j = 0; j < k; ++j) r *= *this;
    return r;
  }

  friend bool operator==(const Poly& x, const Poly& y) {
    return x.terms == y.terms;
  }

  // Common grading of all terms: coefficient grading + monomial grading.
  // nullopt when zero or inhomogeneous.
  std::optional<Grading> grading() const {
    std::optional<Grading> r;
    for (auto& [m, c] : terms) {
      auto cg = scalar_grading(c);
      if (!cg) return std::nullopt;
      Grading g = monomial_grading(*sig, m) + *cg;
      if (r && !(*r == g)) return std::nullopt;
      r = g;
    }
    return r;
  }
  bool homogeneous() const { return is_zero() || grading().has_value(); }

 private:
  void check_sig(const Poly& o) const {
    if (sig != o.sig) throw Error("Poly: mixed signatures");
  }
  void check_exponents(const Monomial& m) const {
    if (m.size() != sig->size()) throw Error("Poly: bad monomial length");
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] < 0 && !sig->gens[i].invertible)
        throw Error("Poly: negative exponent on non-invertible generator " +
                    sig->gens[i].name);
  }
  static S inverse_scalar_pow(const S& c, int k);
};

template <class S>
S Poly<S>::inverse_scalar_pow(const S& c, int k) {
  return c.pow(k);
}
template <>
inline long long Poly<long long>::inverse_scalar_pow(const long long& c,
                                                     int k) {
  if (c == 1) return 1;
  if (c == -1) return k % 2 == 0 ? 1 : -1;
  throw Error("Poly<long long>: negative power of non-unit scalar");
}

// ------------------------------------------------------------------ Triple
// Value in a product of three component rings (the restriction targets are
// indexed by the fixed-point components); operations are componentwise, so
// cross-component products vanish by construction.

template <class S>
struct Triple {
  Poly<S> c0, c1, c2;

  Triple& operator+=(const Triple& o) {
    c0 += o.c0;
    c1 += o.c1;
    c2 += o.c2;
    return *this;
  }
  Triple& operator-=(const Triple& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    c2 -= o.c2;
    return *this;
  }
  friend Triple operator+(Triple x, const Triple& y) { return x += y; }
  friend Triple operator-(Triple x, const Triple& y) { return x -= y; }
  friend Triple operator*(const Triple& x, const Triple& y) {
    return {x.c0 * y.c0, x.c1 * y.c1, x.c2 * y.c2};
  }
  Triple& operator*=(const Triple& o) { return *this = *this * o; }
  Triple pow(int k) const { return {c0.pow(k), c1.pow(k), c2.pow(k)}; }
  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  friend bool operator==(const Triple&, const Triple&) = default;

  // Homogeneity: every component homogeneous of the same grading g (empty
  // components impose no constraint).
  bool homogeneous_of(const Grading& g) const {
    for (const auto* p : {&c0, &c1, &c2}) {
      if (p->is_zero()) continue;
      auto pg = p->grading();
      if (!pg || !(*pg == g)) return false;
    }
    return true;
  }
};

// Push a Poly through a coefficient map (same signature, new scalars).
template <class T, class S, class F>
Poly<T> map_coefficients(const Poly<S>& p, F&& f) {
  Poly<T> r(*p.sig);
  for (auto& [m, c] : p.terms) r.add_term(m, f(c));
  return r;
}

// --------------------------------------------------------------- signatures

const Signature& sig_P();      // BU(2) cohomology presentation
const Signature& sig_eta0();   // target component 0: H[c1,c2][z1^+-, z2^+-]
const Signature& sig_eta1();   // target component 1: H[x1,x2][z0^+-, z2^+-]
const Signature& sig_eta2();   // target component 2: H[c1,c2][z0^+-, z1^+-]
const Signature& sig_rho();    // underlying: Z[iota^+-][c1,c2][z0,z1,z2]^+-
const Signature& sig_bu1();    // BU(1) cohomology: H[z0, z1, cw, cxw]
const Signature& sig_fixed0(); // Z[c1,c2] (fixed-set rings, e = zeta = 1)
const Signature& sig_fixed1(); // Z[x1,x2]
const Signature& sig_fixed2(); // Z[c1,c2]

}  // namespace bu2cc
