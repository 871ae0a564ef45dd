// expr.hpp — text syntax for ring elements and gradings.
//
// Polynomial grammar (recursive descent; whitespace ignored):
//   expr    := ['-'] term ( ('+'|'-') term )*
//   term    := factor ( '*' factor )*
//   factor  := primary [ '^' ['-'] INT ]
//   primary := INT | NAME | 'tau' '(' '-' INT ')' | '(' expr ')'
//
// NAME is either a generator of the active signature or a scalar symbol of
// the active scalar ring:
//   H fragment:   1, g, k (= kappa = 2-g), e, xi (alias x), einv (only in
//                 the combination einv^m*k = e^-m kappa), tau(-n)
//   Z[e^{+-1}]:   e (any integer exponent)
//   Z[iota^+-]:   i (any integer exponent)
//
// Gradings: "a + b*s + m0*O0 + m1*O1 + ..." with integer coefficients.
//
// Printing inverts parsing: parse(print(p)) == p.
#pragma once

#include <string>
#include <string_view>

#include "bu2cc/ring.hpp"

namespace bu2cc {

struct ParseError : Error {
  using Error::Error;
};

Poly<Coeff> parse_poly_h(const Signature& sig, std::string_view text);
Poly<FixedScalar> parse_poly_fixed(const Signature& sig, std::string_view text);
Poly<NoneqScalar> parse_poly_noneq(const Signature& sig, std::string_view text);
Poly<long long> parse_poly_int(const Signature& sig, std::string_view text);

// A bare monomial: product of generators with nonzero integer exponents.
Monomial parse_monomial(const Signature& sig, std::string_view text);

// A bare scalar of H (no generators allowed).
Coeff parse_coeff(std::string_view text);

Grading parse_grading(std::string_view text, int n_omegas);

template <class S>
std::string poly_str(const Poly<S>& p);

extern template std::string poly_str(const Poly<Coeff>&);
extern template std::string poly_str(const Poly<FixedScalar>&);
extern template std::string poly_str(const Poly<NoneqScalar>&);
extern template std::string poly_str(const Poly<long long>&);

template <class S>
std::string triple_str(const Triple<S>& t) {
  return "(" + poly_str(t.c0) + ", " + poly_str(t.c1) + ", " + poly_str(t.c2) +
         ")";
}

}  // namespace bu2cc
