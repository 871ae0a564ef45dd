// coeff.hpp — arithmetic in the RO(C2)-graded coefficient ring H of a point.
//
// H is the C2-equivariant ordinary cohomology of a point with Burnside-ring
// coefficients, graded on RO(C2) = Z{1, sigma}.  We realize the subring/
// fragment generated by the classes that actually occur as coefficients of
// characteristic classes of rank <= 2 bundles:
//
//   1, g            the Burnside ring A(C2) = Z{1, g} in grading 0
//   e^m xi^n        the "positive cone" (e: Euler class of sigma, grading
//                   sigma; xi: grading 2sigma - 2); torsion when m,n >= 1
//   e^-m kappa      the "negative cone" classes, grading -m*sigma (m >= 1)
//   tau(iota^-n)    norm classes, grading n - n*sigma (n >= 2 even)
//
// kappa = 2 - g is not a basis symbol: it expands into A(C2).  The products
// of basis symbols follow the closed-form table implemented in coeff.cpp;
// any product lands back in the fragment, with the mod-2 relation
// 2 e^m xi^n = 0 (m, n >= 1) applied eagerly.
//
// The two scalar rings of the restriction targets also live here:
//   NoneqScalar = Z[iota^{+-1}]   (underlying point; grading iota = sigma-1)
//   FixedScalar = Z[e^{+-1}]      (fixed points; grading e = sigma)
#pragma once

#include <compare>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace bu2cc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An RO(C2) grading a + b*sigma.
struct RO2 {
  int a = 0;
  int b = 0;

  friend RO2 operator+(RO2 x, RO2 y) { return {x.a + y.a, x.b + y.b}; }
  friend RO2 operator-(RO2 x, RO2 y) { return {x.a - y.a, x.b - y.b}; }
  RO2 operator-() const { return {-a, -b}; }
  RO2 operator*(int k) const { return {a * k, b * k}; }
  friend bool operator==(const RO2&, const RO2&) = default;
  friend auto operator<=>(const RO2&, const RO2&) = default;

  std::string str() const;
};

// Basis symbol of the H fragment.
struct CoeffSym {
  enum class Kind { one = 0, g = 1, pos_cone = 2, neg_kappa = 3, tau = 4 };
  Kind kind = Kind::one;
  int m = 0;  // pos_cone: exponent of e;  neg_kappa: e^-m kappa
  int n = 0;  // pos_cone: exponent of xi; tau: tau(iota^-n)

  friend auto operator<=>(const CoeffSym&, const CoeffSym&) = default;

  RO2 grading() const;
  bool torsion() const { return kind == Kind::pos_cone && m >= 1 && n >= 1; }
  std::string str() const;  // "1", "g", "e^2*xi^3", "einv^2*k", "tau(-4)"
};

// Element of the H fragment: a Z-linear combination of basis symbols, with
// torsion coefficients normalized into {0, 1}.
class Coeff {
 public:
  Coeff() = default;

  static Coeff zero() { return {}; }
  static Coeff integer(long long v);
  static Coeff one() { return integer(1); }
  static Coeff g();
  static Coeff kappa();  // 2 - g
  static Coeff e_pow(int m, long long mult = 1);        // e^m       (m >= 1)
  static Coeff xi_pow(int n, long long mult = 1);       // xi^n      (n >= 1)
  static Coeff pos_cone(int m, int n, long long mult = 1);
  static Coeff neg_kappa(int m, long long mult = 1);    // e^-m kappa
  static Coeff tau(int n, long long mult = 1);          // tau(iota^-n)

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // True when the element lies in A(C2) = Z{1, g}.
  bool in_burnside() const;

  // Coefficient of a single symbol (0 if absent).
  long long coefficient(const CoeffSym& s) const;
  const std::map<CoeffSym, long long>& terms() const { return terms_; }

  // Common grading of all symbols present; nullopt when inhomogeneous or zero.
  std::optional<RO2> grading() const;

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  Coeff operator-() const;
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff pow(int k) const;

  friend bool operator==(const Coeff&, const Coeff&) = default;

  std::string str() const;

  // Insert c * sym, normalizing torsion and dropping zeros.
  void add_term(const CoeffSym& sym, long long c);

 private:
  std::map<CoeffSym, long long> terms_;
};

// Laurent polynomials Z[v^{+-1}] used as scalars of the restriction targets.
// Var is 'i' (iota, grading sigma-1) or 'e' (grading sigma).
template <char Var>
class Laurent {
 public:
  Laurent() = default;

  static Laurent zero() { return {}; }
  static Laurent unit(int power = 0, long long coeff = 1) {
    Laurent r;
    r.add_term(power, coeff);
    return r;
  }
  static Laurent integer(long long v) { return unit(0, v); }
  static Laurent one() { return integer(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
  }
  const std::map<int, long long>& terms() const { return c_; }
  long long coefficient(int power) const {
    auto it = c_.find(power);
    return it == c_.end() ? 0 : it->second;
  }
  // Evaluation at v = 1 (sum of coefficients).
  long long at_one() const {
    long long s = 0;
    for (auto& [p, v] : c_) s += v;
    return s;
  }

  static RO2 var_grading(int power) {
    if constexpr (Var == 'i') return {-power, power};
    else return {0, power};
  }
  std::optional<RO2> grading() const {
    std::optional<RO2> r;
    for (auto& [p, v] : c_) {
      RO2 g = var_grading(p);
      if (r && *r != g) return std::nullopt;
      r = g;
    }
    return r;
  }

  void add_term(int power, long long coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = c_.emplace(power, coeff);
    if (!fresh && (it->second += coeff) == 0) c_.erase(it);
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [p, v] : o.c_) add_term(p, v);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto& [p, v] : o.c_) add_term(p, -v);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const {
    Laurent r;
    for (auto& [p, v] : c_) r.c_[p] = -v;
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [pa, va] : a.c_)
      for (auto& [pb, vb] : b.c_) r.add_term(pa + pb, va * vb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent pow(int k) const {
    if (k < 0) {
      // Only monomials +-v^p are invertible.
      if (c_.size() != 1 || std::abs(c_.begin()->second) != 1)
        throw Error("Laurent::pow: negative power of a non-unit");
      return unit(c_.begin()->first * k,
                  c_.begin()->second < 0 && k % 2 != 0 ? -1 : 1);
    }
    Laurent r = one();
    for (int j = 0; j < k; ++j) r *= *this;
    return r;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  std::string str() const;

 private:
  std::map<int, long long> c_;
};

using NoneqScalar = Laurent<'i'>;  // Z[iota^{+-1}]
using FixedScalar = Laurent<'e'>;  // Z[e^{+-1}]

// The two scalar-level restrictions out of H.
//   rho: underlying point.  rho(g) = 2, rho(xi) = iota^2, rho(e^m ...) = 0
//        for m >= 1, rho(e^-m kappa) = 0, rho(tau(iota^-n)) = 2 iota^-n.
//   phi: geometric fixed points.  phi(g) = 0, phi(e) = e, phi(xi) = 0,
//        phi(e^-m kappa) = 2 e^-m, phi(tau) = 0.  (So phi(kappa) = 2.)
NoneqScalar coeff_rho(const Coeff& c);
FixedScalar coeff_phi(const Coeff& c);

}  // namespace bu2cc
