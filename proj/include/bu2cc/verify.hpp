// verify.hpp — mechanized verification suites.
//
// Each suite re-derives one family of facts about the ring and its maps and
// compares against frozen expected values; a CheckResult records one such
// comparison.  The suites are what the acceptance binary and the CLI's
// `verify-all` subcommand run.
#pragma once

#include <string>
#include <vector>

namespace bu2cc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // got-vs-expected on failure, short echo on success
};

struct VerifyReport {
  std::string title;
  std::vector<CheckResult> checks;

  explicit VerifyReport(std::string t = "") : title(std::move(t)) {}

  void add(std::string name, bool pass, std::string detail = "");
  // Convenience: compare printed forms, recording both on mismatch.
  void expect_eq(std::string name, const std::string& got,
                 const std::string& expected);
  bool all_pass() const;
  int failures() const;
};

// 1. All 15 overlap pairs resolve; the ten nontrivial common normal forms
//    match their frozen values, the other five pairs are coprime.
VerifyReport verify_confluence();

// 2. The three defining relations hold under eta, with the frozen shared
//    value for relation 2.
VerifyReport verify_relations();

// 3. Every generator's eta image is homogeneous of the generator's grading,
//    and phibar agrees with eta pushed through phi on coefficients.
VerifyReport verify_eta_table();

// 4. Basis grids for three pages, and the frozen basis monomials with their
//    gradings and fixed sets on the 0-page and the omega-page.
VerifyReport verify_pages();

// 5. The rho images of the three relations reduce to identities after
//    iota-canonicalization.
VerifyReport verify_rho();

// 6. phibar generator values, derived preimage identities, and
//    phibar(psi(t)) == t for every tabulated psi generator.
VerifyReport verify_phibar_psi();

// 7. The unit group has exactly 16 elements; the idempotent structure
//    constants re-derive from normal forms; duality relations and the
//    involution property hold.
VerifyReport verify_units_duals();

// 8. All line and surface characteristic numbers, plus the two bordism
//    distinguishers with their witness classes.
VerifyReport verify_charnums(const std::string& data_dir);

// 9. Property suites: coefficient ring laws, normal-form invariants,
//    homomorphism sampling, even-grading injectivity of eta.
VerifyReport verify_properties();

std::vector<VerifyReport> verify_all(const std::string& data_dir);

}  // namespace bu2cc
