// grading.hpp — the grading group RO(Pi_1) of the equivariant classifying
// space, for BU(2) and BU(1) alike.
//
// For BU(n) the group is Z{1, sigma, O_0, ..., O_{n}} subject to the single
// relation O_0 + ... + O_n = 2 sigma - 2, where O_i is the tautological
// summand over the i-th fixed-point component (n+1 components: splitting type
// by the number of sigma-summands).  Elements are stored canonically with the
// last O-coefficient shifted to zero, so equality is coordinate equality.
//
// Invariants under the relation (and hence well-defined on classes):
//   rho_degree  = a + b                      (underlying total degree)
//   phi_degree  = (a - 2 m_i)_i              (fixed-component degrees)
//   is_even     = parity of a and of b
#pragma once

#include <string>
#include <vector>

#include "bu2cc/coeff.hpp"

namespace bu2cc {

class Grading {
 public:
  // Zero grading in the group with n_omegas O-generators (3 for BU(2),
  // 2 for BU(1)).
  explicit Grading(int n_omegas = 3);
  Grading(int a, int b, std::vector<int> m);
  static Grading ro2(RO2 v, int n_omegas = 3);
  static Grading omega(int i, int n_omegas = 3);

  int n_omegas() const { return static_cast<int>(m_.size()); }
  int a() const { return a_; }
  int b() const { return b_; }
  const std::vector<int>& m() const { return m_; }

  Grading& operator+=(const Grading& o);
  Grading& operator-=(const Grading& o);
  friend Grading operator+(Grading x, const Grading& y) { return x += y; }
  friend Grading operator-(Grading x, const Grading& y) { return x -= y; }
  Grading operator-() const;
  Grading operator*(int k) const;
  Grading& operator+=(RO2 v);
  friend Grading operator+(Grading x, RO2 v) { return x += v; }

  friend bool operator==(const Grading&, const Grading&) = default;
  friend auto operator<=>(const Grading&, const Grading&) = default;

  int rho_degree() const { return a_ + b_; }
  std::vector<int> phi_degree() const;
  bool is_even() const { return a_ % 2 == 0 && b_ % 2 == 0; }

  // Whether the class lies in the RO(C2) subgroup, and its coordinates there.
  bool is_ro2() const;
  RO2 ro2_part() const;

  // Text form "a + b*s + m0*O0 + ...", using the representative with all
  // O-coefficients >= 0 and at least one equal to 0.
  std::string str() const;

 private:
  void canonicalize();

  int a_ = 0;
  int b_ = 0;
  std::vector<int> m_;
};

}  // namespace bu2cc
