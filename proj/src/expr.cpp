// expr.cpp — recursive-descent parser and printer for ring elements.
#include "bu2cc/expr.hpp"

#include <cctype>
#include <sstream>

#include "bu2cc/rewrite.hpp"

namespace bu2cc {

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  enum class Tok { integer, name, plus, minus, star, caret, lparen, rparen, end };
  Tok tok = Tok::end;
  long long int_val = 0;
  std::string name_val;

  explicit Lexer(std::string_view t) : text(t) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at offset " + std::to_string(pos) + ": " +
                     msg + " in \"" + std::string(text) + "\"");
  }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size()) {
      tok = Tok::end;
      return;
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      int_val = std::stoll(std::string(text.substr(start, pos - start)));
      tok = Tok::integer;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[pos])))
        ++pos;
      name_val = std::string(text.substr(start, pos - start));
      tok = Tok::name;
      return;
    }
    ++pos;
    switch (c) {
      case '+': tok = Tok::plus; return;
      case '-': tok = Tok::minus; return;
      case '*': tok = Tok::star; return;
      case '^': tok = Tok::caret; return;
      case '(': tok = Tok::lparen; return;
      case ')': tok = Tok::rparen; return;
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }

  void expect(Tok t, const char* what) {
    if (tok != t) fail(std::string("expected ") + what);
    advance();
  }
};

// Scalar-ring-specific atoms.  Returns false when the name is not a scalar
// symbol of this ring (so it must be a generator).
template <class S>
struct ScalarSyntax;

template <>
struct ScalarSyntax<Coeff> {
  static Coeff integer(long long v) { return Coeff::integer(v); }
  static bool atom(const std::string& name, int exp, Coeff& out, Lexer& lex) {
    if (name == "g") {
      if (exp < 0) lex.fail("g is not invertible");
      out = Coeff::g().pow(exp);
      return true;
    }
    if (name == "e") {
      if (exp < 0) lex.fail("negative powers of e need the form einv^m*k");
      out = exp == 0 ? Coeff::one() : Coeff::e_pow(exp);
      return true;
    }
    if (name == "x" || name == "xi") {
      if (exp < 0) lex.fail("xi is not invertible");
      out = exp == 0 ? Coeff::one() : Coeff::xi_pow(exp);
      return true;
    }
    return false;
  }
};

template <char V>
struct LaurentSyntax {
  static Laurent<V> integer(long long v) { return Laurent<V>::integer(v); }
  static bool atom(const std::string& name, int exp, Laurent<V>& out, Lexer&) {
    if (name.size() == 1 && name[0] == V) {
      out = Laurent<V>::unit(exp);
      return true;
    }
    return false;
  }
};
template <>
struct ScalarSyntax<FixedScalar> : LaurentSyntax<'e'> {};
template <>
struct ScalarSyntax<NoneqScalar> : LaurentSyntax<'i'> {};

template <>
struct ScalarSyntax<long long> {
  static long long integer(long long v) { return v; }
  static bool atom(const std::string&, int, long long&, Lexer&) {
    return false;
  }
};

template <class S>
class PolyParser {
 public:
  PolyParser(const Signature& sig, std::string_view text)
      : sig_(sig), lex_(text) {}

  Poly<S> run() {
    Poly<S> p = parse_expr();
    if (lex_.tok != Lexer::Tok::end) lex_.fail("trailing input");
    return p;
  }

 private:
  using Tok = Lexer::Tok;

  Poly<S> parse_expr() {
    bool neg = false;
    if (lex_.tok == Tok::minus) {
      neg = true;
      lex_.advance();
    }
    Poly<S> acc = parse_term();
    if (neg) acc = -acc;
    while (lex_.tok == Tok::plus || lex_.tok == Tok::minus) {
      bool minus = lex_.tok == Tok::minus;
      lex_.advance();
      Poly<S> t = parse_term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Poly<S> parse_term() {
    Poly<S> acc = Poly<S>::one(sig_);
    int einv_pending = 0;
    parse_factor(acc, einv_pending);
    while (lex_.tok == Tok::star) {
      lex_.advance();
      parse_factor(acc, einv_pending);
    }
    if (einv_pending > 0) lex_.fail("einv must be paired with k in a term");
    return acc;
  }

  int parse_exponent() {
    if (lex_.tok != Tok::caret) return 1;
    lex_.advance();
    bool neg = false;
    if (lex_.tok == Tok::minus) {
      neg = true;
      lex_.advance();
    }
    if (lex_.tok != Tok::integer) lex_.fail("expected integer exponent");
    int e = static_cast<int>(lex_.int_val);
    lex_.advance();
    return neg ? -e : e;
  }

  void parse_factor(Poly<S>& acc, int& einv_pending) {
    if (lex_.tok == Tok::integer) {
      long long v = lex_.int_val;
      lex_.advance();
      int e = parse_exponent();
      if (e < 0) lex_.fail("negative power of an integer");
      long long r = 1;
      for (int j = 0; j < e; ++j) r *= v;
      acc = acc.scaled(ScalarSyntax<S>::integer(r));
      return;
    }
    if (lex_.tok == Tok::lparen) {
      lex_.advance();
      Poly<S> inner = parse_expr();
      lex_.expect(Tok::rparen, "')'");
      int e = parse_exponent();
      acc *= inner.pow(e);
      return;
    }
    if (lex_.tok != Tok::name) lex_.fail("expected a factor");
    std::string name = lex_.name_val;
    lex_.advance();

    if (name == "tau") {
      if constexpr (std::is_same_v<S, Coeff>) {
        lex_.expect(Tok::lparen, "'(' after tau");
        lex_.expect(Tok::minus, "'-' (tau takes a negative index)");
        if (lex_.tok != Tok::integer) lex_.fail("expected tau index");
        int n = static_cast<int>(lex_.int_val);
        lex_.advance();
        lex_.expect(Tok::rparen, "')'");
        int e = parse_exponent();
        if (e < 0) lex_.fail("tau is not invertible");
        acc = acc.scaled(Coeff::tau(n).pow(e));
        return;
      } else {
        lex_.fail("tau is only a scalar of the H fragment");
      }
    }
    if (name == "einv") {
      if constexpr (std::is_same_v<S, Coeff>) {
        int e = parse_exponent();
        if (e < 1) lex_.fail("einv requires a positive exponent");
        einv_pending += e;
        return;
      } else {
        lex_.fail("einv is only a scalar of the H fragment");
      }
    }
    if (name == "k") {
      if constexpr (std::is_same_v<S, Coeff>) {
        int e = parse_exponent();
        if (e < 0) lex_.fail("kappa is not invertible");
        Coeff c = Coeff::one();
        if (einv_pending > 0 && e >= 1) {
          c = Coeff::neg_kappa(einv_pending);
          einv_pending = 0;
          e -= 1;
        }
        acc = acc.scaled(c * Coeff::kappa().pow(e));
        return;
      } else {
        lex_.fail("kappa is only a scalar of the H fragment");
      }
    }

    int e = parse_exponent();
    S sc;
    if (ScalarSyntax<S>::atom(name, e, sc, lex_)) {
      acc = acc.scaled(sc);
      return;
    }
    int gi = sig_.index(name);
    if (gi < 0) lex_.fail("unknown name '" + name + "' in signature " + sig_.id);
    if (e != 0) acc *= Poly<S>::generator(sig_, gi, e);
  }

  const Signature& sig_;
  Lexer lex_;
};

}  // namespace

Poly<Coeff> parse_poly_h(const Signature& sig, std::string_view text) {
  return PolyParser<Coeff>(sig, text).run();
}
Poly<FixedScalar> parse_poly_fixed(const Signature& sig,
                                   std::string_view text) {
  return PolyParser<FixedScalar>(sig, text).run();
}
Poly<NoneqScalar> parse_poly_noneq(const Signature& sig,
                                   std::string_view text) {
  return PolyParser<NoneqScalar>(sig, text).run();
}
Poly<long long> parse_poly_int(const Signature& sig, std::string_view text) {
  return PolyParser<long long>(sig, text).run();
}

Monomial parse_monomial(const Signature& sig, std::string_view text) {
  Poly<long long> p = parse_poly_int(sig, text);
  if (p.terms.size() != 1 || p.terms.begin()->second != 1)
    throw ParseError("expected a bare monomial: " + std::string(text));
  return p.terms.begin()->first;
}

Coeff parse_coeff(std::string_view text) {
  static const Signature empty{"H", 3, {}};
  Poly<Coeff> p = parse_poly_h(empty, text);
  if (p.is_zero()) return Coeff::zero();
  return p.terms.begin()->second;
}

Grading parse_grading(std::string_view text, int n_omegas) {
  Lexer lex(text);
  using Tok = Lexer::Tok;
  int a = 0, b = 0;
  std::vector<int> m(static_cast<size_t>(n_omegas), 0);
  auto apply_sym = [&](const std::string& name, int coeff) {
    if (name == "s") {
      b += coeff;
      return;
    }
    if (name.size() >= 2 && name[0] == 'O') {
      int idx = -1;
      try {
        idx = std::stoi(name.substr(1));
      } catch (...) {
      }
      if (idx >= 0 && idx < n_omegas) {
        m[static_cast<size_t>(idx)] += coeff;
        return;
      }
    }
    lex.fail("unknown grading symbol '" + name + "'");
  };

  bool first = true;
  int sign = 1;
  while (true) {
    if (lex.tok == Tok::end) {
      if (first) lex.fail("empty grading");
      break;
    }
    if (!first || lex.tok == Tok::minus || lex.tok == Tok::plus) {
      if (lex.tok == Tok::minus)
        sign = -1;
      else if (lex.tok == Tok::plus)
        sign = 1;
      else
        lex.fail("expected '+' or '-'");
      lex.advance();
      if (first && lex.tok == Tok::end) lex.fail("dangling sign");
    }
    first = false;
    if (lex.tok == Tok::integer) {
      int v = sign * static_cast<int>(lex.int_val);
      lex.advance();
      if (lex.tok == Tok::star) {
        lex.advance();
        if (lex.tok != Tok::name) lex.fail("expected grading symbol after '*'");
        apply_sym(lex.name_val, v);
        lex.advance();
      } else {
        a += v;
      }
    } else if (lex.tok == Tok::name) {
      apply_sym(lex.name_val, sign);
      lex.advance();
    } else {
      lex.fail("expected a grading term");
    }
    sign = 1;
  }
  return Grading(a, b, std::move(m));
}

// ------------------------------------------------------------------ printing

namespace {

struct Factor {
  std::string text;  // without sign
  bool negative = false;
  bool parens = false;  // needs parentheses when multiplied by a monomial
};

Factor coeff_factor(const Coeff& c) {
  if (c.terms().size() == 1) {
    auto& [sym, v] = *c.terms().begin();
    Factor f;
    f.negative = v < 0;
    long long av = std::abs(v);
    if (sym.kind == CoeffSym::Kind::one)
      f.text = std::to_string(av);
    else if (av == 1)
      f.text = sym.str();
    else
      f.text = std::to_string(av) + "*" + sym.str();
    return f;
  }
  return {c.str(), false, true};
}

template <char V>
Factor coeff_factor(const Laurent<V>& c) {
  if (c.terms().size() == 1) {
    auto& [p, v] = *c.terms().begin();
    Factor f;
    f.negative = v < 0;
    long long av = std::abs(v);
    std::string var(1, V);
    if (p != 0 && p != 1) var += "^" + std::to_string(p);
    if (p == 0)
      f.text = std::to_string(av);
    else if (av == 1)
      f.text = var;
    else
      f.text = std::to_string(av) + "*" + var;
    return f;
  }
  return {c.str(), false, true};
}

Factor coeff_factor(long long v) {
  return {std::to_string(std::abs(v)), v < 0, false};
}

}  // namespace

template <class S>
std::string poly_str(const Poly<S>& p) {
  if (p.is_zero()) return "0";
  // Leading (order-greatest) monomials first: rewrite order for the BU(2)
  // presentation, graded-lex elsewhere.
  std::vector<const std::pair<const Monomial, S>*> terms;
  for (auto& t : p.terms) terms.push_back(&t);
  bool weighted = p.sig->id == "P";
  std::sort(terms.begin(), terms.end(), [&](auto* x, auto* y) {
    if (weighted) return mono_order_less(y->first, x->first);
    int dx = 0, dy = 0;
    for (int v : x->first) dx += v;
    for (int v : y->first) dy += v;
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });

  std::ostringstream os;
  bool first = true;
  for (auto* t : terms) {
    Factor f = coeff_factor(t->second);
    std::string mono = monomial_str(*p.sig, t->first);
    std::string body;
    if (mono == "1")
      // A standalone multi-term coefficient only binds correctly at the
      // front; anywhere else it needs parentheses.
      body = (f.parens && !first) ? "(" + f.text + ")" : f.text;
    else if (f.parens)
      body = "(" + f.text + ")*" + mono;
    else if (f.text == "1")
      body = mono;
    else
      body = f.text + "*" + mono;
    if (first) {
      if (f.negative) os << "-";
      first = false;
    } else {
      os << (f.negative ? " - " : " + ");
    }
    os << body;
  }
  return os.str();
}

template std::string poly_str(const Poly<Coeff>&);
template std::string poly_str(const Poly<FixedScalar>&);
template std::string poly_str(const Poly<NoneqScalar>&);
template std::string poly_str(const Poly<long long>&);

}  // namespace bu2cc
