// maps.hpp — the three restriction maps out of the BU(2) cohomology ring.
//
//   eta    restriction to the three fixed-point components of the total
//          space level: lands in the product of three H-algebras
//            comp0 = H[c1,c2][z1^+-, z2^+-]
//            comp1 = H[x1,x2][z0^+-, z2^+-]
//            comp2 = H[c1,c2][z0^+-, z1^+-]
//          (the zetas restrict invertibly away from their own component),
//          and is injective in even gradings.
//
//   rho    restriction to the underlying nonequivariant ring
//            Z[iota^{+-1}][c1,c2][z0^+-, z1^+-, z2^+-] / (z0 z1 z2 = iota^2);
//          we canonicalize by rewriting iota^2 -> z0 z1 z2 until the
//          iota-exponent lies in {0, 1}.
//
//   phibar geometric fixed points, defined on P (x) Z[e^{+-1}]: lands in the
//          same three component signatures but with Z[e^{+-1}] scalars; it is
//          split surjective with an explicit section psi.
#pragma once

#include <string>
#include <vector>

#include "bu2cc/rewrite.hpp"

namespace bu2cc {

// Generator images (index into sig_P generators).
const Triple<Coeff>& eta_gen(int i);
const Poly<NoneqScalar>& rho_gen(int i);
const Triple<FixedScalar>& phibar_gen(int i);

Triple<Coeff> eta(const Poly<Coeff>& p);

// iota-canonicalization: move even iota-powers into the monomial z0*z1*z2.
Poly<NoneqScalar> rho_canonicalize(Poly<NoneqScalar> p);
Poly<NoneqScalar> rho(const Poly<Coeff>& p);

// Coefficient push P -> P (x) Z[e^{+-1}].
Poly<FixedScalar> to_fixed(const Poly<Coeff>& p);

Triple<FixedScalar> phibar(const Poly<FixedScalar>& p);
Triple<FixedScalar> phibar_of(const Poly<Coeff>& p);  // = phibar(to_fixed(p))

// Push an eta-value through phi on coefficients (components keep their
// signatures, scalars change ring).
Triple<FixedScalar> triple_phi(const Triple<Coeff>& t);

// Fixed sets of a class: phibar followed by e = 1, zeta = 1; lands in
// (Z[c1,c2], Z[x1,x2], Z[c1,c2]).
Triple<long long> fixed_sets(const Poly<Coeff>& p);

// ------------------------------------------------------------------- psi
// The section of phibar.  Each entry is a target basis element together
// with its preimage in P (x) Z[e^{+-1}] (in normal form).

struct PsiEntry {
  std::string label;
  Triple<FixedScalar> target;
  Poly<FixedScalar> value;
};

const std::vector<PsiEntry>& psi_table();

// Triple construction helpers (component polynomials parsed over the
// component signatures).
Triple<Coeff> eta_triple(const std::string& t0, const std::string& t1,
                         const std::string& t2);
Triple<FixedScalar> fixed_triple(const std::string& t0, const std::string& t1,
                                 const std::string& t2);

}  // namespace bu2cc
