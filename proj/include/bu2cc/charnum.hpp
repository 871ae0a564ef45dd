// charnum.hpp — characteristic numbers of equivariant lines and surfaces.
//
// A manifold fixture carries the data needed to evaluate tautological
// classes against a fundamental class:
//   * its own cohomology presentation (either generator images of the
//     tautological classes under the classifying map, with a nilpotency
//     truncation, or an explicit class table),
//   * a list of evaluation pairs <monomial> |-> value in H on the top cell.
// Characteristic numbers of X are pairings <f(x)> = <tangent pullback of f,
// [X]>; the relevant classes for a given dimension are the basis monomials
// of the dimension page whose position (a', b') satisfies a' <= 0 and
// a' + b' >= 0 (the wedge in which a pairing against the fundamental class
// can be nonzero).
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bu2cc/rewrite.hpp"

namespace bu2cc {

// The classifying space of equivariant line bundles; intrinsic basis
// elements of the dimension-omega(1) page used for line fixtures.
const Signature& sig_bu1();
std::vector<BasisElement> bu1_omega_basis();

struct Manifold {
  std::string name;
  std::string source;  // "bu1" | "bu2": which tautological ring maps in
  Grading dim;         // dimension grading (the page the relevant classes live on)
  std::unique_ptr<Signature> sig;  // presentation of H^*(X) (may be empty)
  int nilpotency = 0;              // x^n = 0 for every generator x of sig

  // Images of the tautological generators (by name) in X, for fixtures
  // presented by a classifying map.
  std::vector<std::pair<std::string, Poly<Coeff>>> gen_images;
  // Alternatively: tangent pullbacks recorded class-by-class (monomial in
  // the source ring |-> element of X).
  std::vector<std::pair<Monomial, Poly<Coeff>>> class_table;
  // Extra multiplicative identities of the fixture, recorded as
  // (element, power, value) with element^power = value in H^*(X).
  struct ProductFact {
    Poly<Coeff> element;
    int power = 0;
    Poly<Coeff> value;
  };
  std::vector<ProductFact> product_facts;

  // <monomial in sig> |-> value in H of the pairing with [X].
  std::vector<std::pair<Monomial, Coeff>> evaluations;

  bool has_class_table() const { return !class_table.empty(); }
};

// Load data/manifolds/<name>.json.
Manifold load_manifold(const std::string& data_dir, const std::string& name);

// Multiply inside H^*(X): truncate every generator exponent at the
// nilpotency bound and apply the fixture's product facts.
Poly<Coeff> manifold_mul(const Manifold& x, const Poly<Coeff>& p,
                         const Poly<Coeff>& q);
Poly<Coeff> manifold_pow(const Manifold& x, const Poly<Coeff>& p, int k);

// Pull a tautological class back along the tangent classifying map.
Poly<Coeff> tangent_pullback(const Manifold& x, const Monomial& cls);

// Pair an element of H^*(X) with the fundamental class.  Every monomial
// with a nonzero coefficient must literally appear in the evaluation table
// (or pair to zero by grading); anything else is an error.
Coeff evaluate(const Manifold& x, const Poly<Coeff>& p);

// The characteristic number <cls(x)>[X].
Coeff charnum(const Manifold& x, const Monomial& cls);

// Basis monomials of the page of `dim` inside the evaluation wedge,
// ordered by position then monomial order.
std::vector<BasisElement> relevant_classes(const Grading& dim);
std::vector<BasisElement> relevant_classes_bu1(const Grading& dim);

struct DistinguishResult {
  bool distinguished = false;
  std::string witness;  // monomial string of the first differing class
  Coeff value_a, value_b;
};

// Compare two manifolds of equal dimension against the relevant classes in
// order; report the first class whose numbers differ.
DistinguishResult bordism_distinguish(const Manifold& a, const Manifold& b);

}  // namespace bu2cc
