// coeff.cpp — product table and textual form of the H fragment.
#include "bu2cc/coeff.hpp"

#include <cassert>
#include <sstream>

namespace bu2cc {

std::string RO2::str() const {
  std::ostringstream os;
  if (a == 0 && b == 0) return "0";
  bool first = true;
  auto piece = [&](int v, const char* sym) {
    if (v == 0) return;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    int av = std::abs(v);
    if (!sym) {
      os << av;
    } else {
      if (av != 1) os << av << "*";
      os << sym;
    }
  };
  piece(a, nullptr);
  piece(b, "s");
  return os.str();
}

RO2 CoeffSym::grading() const {
  switch (kind) {
    case Kind::one:
    case Kind::g:
      return {0, 0};
    case Kind::pos_cone:
      return {-2 * n, m + 2 * n};
    case Kind::neg_kappa:
      return {0, -m};
    case Kind::tau:
      return {n, -n};
  }
  return {0, 0};
}

std::string CoeffSym::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::one:
      return "1";
    case Kind::g:
      return "g";
    case Kind::pos_cone:
      if (m > 0) {
        os << "e";
        if (m > 1) os << "^" << m;
        if (n > 0) os << "*";
      }
      if (n > 0) {
        os << "xi";
        if (n > 1) os << "^" << n;
      }
      return os.str();
    case Kind::neg_kappa:
      os << "einv";
      if (m > 1) os << "^" << m;
      os << "*k";
      return os.str();
    case Kind::tau:
      os << "tau(-" << n << ")";
      return os.str();
  }
  return "?";
}

void Coeff::add_term(const CoeffSym& sym, long long c) {
  if (sym.kind == CoeffSym::Kind::pos_cone && sym.m == 0 && sym.n == 0)
    throw Error("Coeff: pos_cone symbol requires m + n >= 1");
  if (sym.kind == CoeffSym::Kind::neg_kappa && sym.m < 1)
    throw Error("Coeff: neg_kappa symbol requires m >= 1");
  if (sym.kind == CoeffSym::Kind::tau && (sym.n < 2 || sym.n % 2 != 0))
    throw Error("Coeff: tau symbol requires even n >= 2");
  auto [it, fresh] = terms_.emplace(sym, 0);
  it->second += c;
  if (sym.torsion()) it->second = ((it->second % 2) + 2) % 2;
  if (it->second == 0) terms_.erase(it);
}

Coeff Coeff::integer(long long v) {
  Coeff r;
  r.add_term({CoeffSym::Kind::one, 0, 0}, v);
  return r;
}
Coeff Coeff::g() {
  Coeff r;
  r.add_term({CoeffSym::Kind::g, 0, 0}, 1);
  return r;
}
Coeff Coeff::kappa() { return integer(2) - g(); }
Coeff Coeff::pos_cone(int m, int n, long long mult) {
  Coeff r;
  r.add_term({CoeffSym::Kind::pos_cone, m, n}, mult);
  return r;
}
Coeff Coeff::e_pow(int m, long long mult) { return pos_cone(m, 0, mult); }
Coeff Coeff::xi_pow(int n, long long mult) { return pos_cone(0, n, mult); }
Coeff Coeff::neg_kappa(int m, long long mult) {
  Coeff r;
  r.add_term({CoeffSym::Kind::neg_kappa, m, 0}, mult);
  return r;
}
Coeff Coeff::tau(int n, long long mult) {
  Coeff r;
  r.add_term({CoeffSym::Kind::tau, 0, n}, mult);
  return r;
}

bool Coeff::is_one() const {
  return terms_.size() == 1 &&
         terms_.begin()->first.kind == CoeffSym::Kind::one &&
         terms_.begin()->second == 1;
}

bool Coeff::in_burnside() const {
  for (auto& [s, v] : terms_)
    if (s.kind != CoeffSym::Kind::one && s.kind != CoeffSym::Kind::g)
      return false;
  return true;
}

long long Coeff::coefficient(const CoeffSym& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<RO2> Coeff::grading() const {
  std::optional<RO2> r;
  for (auto& [s, v] : terms_) {
    RO2 g = s.grading();
    if (r && *r != g) return std::nullopt;
    r = g;
  }
  return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  for (auto& [s, v] : o.terms_) add_term(s, v);
  return *this;
}
Coeff& Coeff::operator-=(const Coeff& o) {
  for (auto& [s, v] : o.terms_) add_term(s, -v);
  return *this;
}
Coeff Coeff::operator-() const {
  Coeff r;
  for (auto& [s, v] : terms_) r.add_term(s, -v);
  return r;
}

namespace {

using K = CoeffSym::Kind;

// Product of two basis symbols, multiplied out in H.
Coeff mul_syms(const CoeffSym& x, const CoeffSym& y) {
  if (x.kind > y.kind) return mul_syms(y, x);
  switch (x.kind) {
    case K::one: {
      Coeff r;
      r.add_term(y, 1);
      return r;
    }
    case K::g:
      switch (y.kind) {
        case K::g: {
          Coeff r;  // g * g = 2g
          r.add_term({K::g, 0, 0}, 2);
          return r;
        }
        case K::pos_cone:
          // g * e^m xi^n = 0 when m >= 1 (e g = 0), else 2 xi^n.
          return y.m >= 1 ? Coeff::zero() : Coeff::xi_pow(y.n, 2);
        case K::neg_kappa:
          return Coeff::zero();
        case K::tau:
          return Coeff::tau(y.n, 2);
        default:
          break;
      }
      break;
    case K::pos_cone:
      switch (y.kind) {
        case K::pos_cone:
          return Coeff::pos_cone(x.m + y.m, x.n + y.n);
        case K::neg_kappa:
          // e^a xi^b * e^-m kappa: dies on xi; along the e-axis the cones
          // glue through kappa e^m = 2 e^m.
          if (x.n >= 1) return Coeff::zero();
          if (x.m < y.m) return Coeff::neg_kappa(y.m - x.m);
          if (x.m == y.m) return Coeff::kappa();
          return Coeff::e_pow(x.m - y.m, 2);
        case K::tau:
          // tau(iota^-n) * e^a xi^b: Frobenius pushes rho(e^a xi^b) inside.
          if (x.m >= 1) return Coeff::zero();
          if (2 * x.n < y.n) return Coeff::tau(y.n - 2 * x.n);
          if (2 * x.n == y.n) return Coeff::g();
          return Coeff::xi_pow(x.n - y.n / 2, 2);
        default:
          break;
      }
      break;
    case K::neg_kappa:
      switch (y.kind) {
        case K::neg_kappa:
          return Coeff::neg_kappa(x.m + y.m, 2);
        case K::tau:
          return Coeff::zero();
        default:
          break;
      }
      break;
    case K::tau:
      return Coeff::tau(x.n + y.n, 2);
  }
  throw Error("Coeff: unhandled symbol product");
}

}  // namespace

Coeff operator*(const Coeff& a, const Coeff& b) {
  Coeff r;
  for (auto& [sa, va] : a.terms()) {
    for (auto& [sb, vb] : b.terms()) {
      Coeff p = mul_syms(sa, sb);
      for (auto& [s, v] : p.terms()) r.add_term(s, v * va * vb);
    }
  }
  return r;
}

Coeff Coeff::pow(int k) const {
  if (k < 0) {
    // The units of H are +-1 and +-(1 - kappa), all of square 1.
    if (*this * *this == Coeff::one())
      return k % 2 == 0 ? Coeff::one() : *this;
    throw Error("Coeff::pow: negative power of a non-unit in H");
  }
  Coeff r = Coeff::one();
  for (int j = 0; j < k; ++j) r *= *this;
  return r;
}

std::string Coeff::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [s, v] : terms_) {
    long long av = std::abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (s.kind == K::one) {
      os << av;
    } else {
      if (av != 1) os << av << "*";
      os << s.str();
    }
  }
  return os.str();
}

template <char Var>
std::string Laurent<Var>::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    auto [p, v] = *it;
    long long av = std::abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (p == 0) {
      os << av;
    } else {
      if (av != 1) os << av << "*";
      os << Var;
      if (p != 1) os << "^" << p;
    }
  }
  return os.str();
}

template std::string Laurent<'i'>::str() const;
template std::string Laurent<'e'>::str() const;

NoneqScalar coeff_rho(const Coeff& c) {
  NoneqScalar r;
  for (auto& [s, v] : c.terms()) {
    switch (s.kind) {
      case K::one:
        r.add_term(0, v);
        break;
      case K::g:
        r.add_term(0, 2 * v);
        break;
      case K::pos_cone:
        if (s.m == 0) r.add_term(2 * s.n, v);
        break;
      case K::neg_kappa:
        break;
      case K::tau:
        r.add_term(-s.n, 2 * v);
        break;
    }
  }
  return r;
}

FixedScalar coeff_phi(const Coeff& c) {
  FixedScalar r;
  for (auto& [s, v] : c.terms()) {
    switch (s.kind) {
      case K::one:
        r.add_term(0, v);
        break;
      case K::g:
        break;
      case K::pos_cone:
        if (s.n == 0) r.add_term(s.m, v);
        break;
      case K::neg_kappa:
        r.add_term(-s.m, 2 * v);
        break;
      case K::tau:
        break;
    }
  }
  return r;
}

}  // namespace bu2cc
