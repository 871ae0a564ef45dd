// Python bindings: string-level access to normal forms, the restriction
// maps, basis enumeration, units/duality, characteristic numbers, and the
// verification battery.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "bu2cc/charnum.hpp"
#include "bu2cc/expr.hpp"
#include "bu2cc/maps.hpp"
#include "bu2cc/rewrite.hpp"
#include "bu2cc/units.hpp"
#include "bu2cc/verify.hpp"

namespace py = pybind11;
using namespace bu2cc;

namespace {

Poly<Coeff> parse_p(const std::string& expr) {
  return parse_poly_h(sig_P(), expr);
}

std::string nf(const std::string& expr) {
  return poly_str(rewrite_bu2().normal_form(parse_p(expr)));
}

std::vector<std::string> nf_steps(const std::string& expr) {
  std::vector<Poly<Coeff>> chain;
  rewrite_bu2().normal_form(parse_p(expr), &chain);
  std::vector<std::string> out;
  out.reserve(chain.size());
  for (const auto& p : chain) out.push_back(poly_str(p));
  return out;
}

using StrTriple = std::tuple<std::string, std::string, std::string>;

template <class S>
StrTriple triple_strings(const Triple<S>& t) {
  return {poly_str(t.c0), poly_str(t.c1), poly_str(t.c2)};
}

StrTriple eta_str(const std::string& expr) {
  return triple_strings(eta(parse_p(expr)));
}

std::string rho_str(const std::string& expr) {
  return poly_str(rho(parse_p(expr)));
}

StrTriple phibar_str(const std::string& expr) {
  return triple_strings(phibar(parse_poly_fixed(sig_P(), expr)));
}

StrTriple fixed_sets_str(const std::string& expr) {
  return triple_strings(fixed_sets(parse_p(expr)));
}

std::string dualize_str(const std::string& expr) {
  return poly_str(dualize(parse_p(expr)));
}

std::vector<std::tuple<std::string, int, int>> basis_str(
    const std::string& page, int a_max) {
  std::vector<std::tuple<std::string, int, int>> out;
  for (const BasisElement& b :
       enumerate_basis(parse_grading(page, sig_P().n_omegas), a_max))
    out.emplace_back(monomial_str(sig_P(), b.m), b.pos.a, b.pos.b);
  return out;
}

bool confluent() {
  for (const Overlap& o : confluence_overlaps())
    if (!o.confluent) return false;
  return true;
}

std::vector<std::string> units_str() {
  std::vector<std::string> out;
  for (const GradingZero& u : unit_group()) out.push_back(u.str());
  return out;
}

std::string charnum_str(const std::string& data_dir, const std::string& name,
                        const std::string& cls) {
  Manifold x = load_manifold(data_dir, name);
  const Signature& src = x.source == "bu1" ? sig_bu1() : sig_P();
  return charnum(x, parse_monomial(src, cls)).str();
}

std::vector<std::pair<std::string, std::string>> charnums_str(
    const std::string& data_dir, const std::string& name) {
  Manifold x = load_manifold(data_dir, name);
  const Signature& src = x.source == "bu1" ? sig_bu1() : sig_P();
  std::vector<std::pair<std::string, std::string>> out;
  for (const BasisElement& be : relevant_classes(x.dim))
    out.emplace_back(monomial_str(src, be.m), charnum(x, be.m).str());
  return out;
}

std::tuple<bool, std::string, std::string, std::string> distinguish_str(
    const std::string& data_dir, const std::string& a, const std::string& b) {
  DistinguishResult r = bordism_distinguish(load_manifold(data_dir, a),
                                            load_manifold(data_dir, b));
  return {r.distinguished, r.witness, r.value_a.str(), r.value_b.str()};
}

std::vector<std::tuple<std::string, bool, int>> verify_str(
    const std::string& data_dir) {
  std::vector<std::tuple<std::string, bool, int>> out;
  for (const VerifyReport& r : verify_all(data_dir))
    out.emplace_back(r.title, r.all_pass(), static_cast<int>(r.checks.size()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_bu2cc, m) {
  m.doc() =
      "Equivariant cohomology of BU(2): normal forms, restriction maps, "
      "units, and characteristic numbers (string-level interface).";

  py::register_exception<Error>(m, "Error");

  m.def("nf", &nf, py::arg("expr"),
        "Normal form of an expression in the BU(2) presentation.");
  m.def("nf_steps", &nf_steps, py::arg("expr"),
        "Intermediate polynomials of the reduction, one per rewrite step.");
  m.def("eta", &eta_str, py::arg("expr"),
        "Restriction to the three fixed-point components.");
  m.def("rho", &rho_str, py::arg("expr"),
        "Restriction to the underlying nonequivariant ring.");
  m.def("phibar", &phibar_str, py::arg("expr"),
        "Geometric fixed points (scalars Z[e^+-1]).");
  m.def("fixed_sets", &fixed_sets_str, py::arg("expr"),
        "Fixed sets: phibar followed by e = zeta = 1.");
  m.def("dualize", &dualize_str, py::arg("expr"),
        "The duality involution, in normal form.");
  m.def("basis", &basis_str, py::arg("page"), py::arg("a_max") = 6,
        "Basis monomials of a page as (monomial, a, b) tuples.");
  m.def("confluent", &confluent,
        "Whether all overlap pairs of the rewriting system resolve.");
  m.def("units", &units_str, "The sixteen units of grading zero.");
  m.def("charnum", &charnum_str, py::arg("data_dir"), py::arg("manifold"),
        py::arg("cls"), "One characteristic number of a fixture manifold.");
  m.def("charnums", &charnums_str, py::arg("data_dir"), py::arg("manifold"),
        "All characteristic numbers of a fixture manifold, in class order.");
  m.def("distinguish", &distinguish_str, py::arg("data_dir"), py::arg("a"),
        py::arg("b"),
        "First relevant class whose numbers differ, with both values.");
  m.def("verify", &verify_str, py::arg("data_dir"),
        "Run the verification battery; (title, passed, checks) per suite.");
}
