// bu2cc — command-line interrogation of the BU(2) equivariant cohomology
// engine: normal forms, restriction maps, basis pages, confluence and unit
// certificates, characteristic numbers, and the full verification battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bu2cc/jsonio.hpp"

namespace {

using namespace bu2cc;
using nlohmann::json;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_nf(const std::string& format, const std::string& expr, bool steps) {
  Poly<Coeff> p = parse_poly_h(sig_P(), expr);
  std::vector<Poly<Coeff>> chain;
  Poly<Coeff> n = rewrite_bu2().normal_form(p, steps ? &chain : nullptr);
  if (format == "json") {
    json j{{"input", expr}, {"normal_form", n}};
    if (steps) j["steps"] = chain;
    emit(j);
    return 0;
  }
  if (steps)
    for (const auto& q : chain) std::cout << "  -> " << poly_str(q) << "\n";
  std::cout << poly_str(n) << "\n";
  return 0;
}

int run_eta(const std::string& format, const std::string& expr) {
  Triple<Coeff> t = eta(parse_poly_h(sig_P(), expr));
  if (format == "json")
    emit(json{{"input", expr}, {"eta", t}});
  else
    std::cout << triple_str(t) << "\n";
  return 0;
}

int run_rho(const std::string& format, const std::string& expr) {
  Poly<NoneqScalar> p = rho_canonicalize(rho(parse_poly_h(sig_P(), expr)));
  if (format == "json")
    emit(json{{"input", expr}, {"rho", p}});
  else
    std::cout << poly_str(p) << "\n";
  return 0;
}

int run_phi(const std::string& format, const std::string& expr) {
  // Parsed over Z[e^{+-1}] coefficients so negative powers of e are allowed
  // (phibar lives on P tensored with Z[e^{+-1}]).
  Triple<FixedScalar> t = phibar(parse_poly_fixed(sig_P(), expr));
  if (format == "json")
    emit(json{{"input", expr}, {"phi", t}});
  else
    std::cout << triple_str(t) << "\n";
  return 0;
}

int run_dualize(const std::string& format, const std::string& expr) {
  Poly<Coeff> d = dualize(parse_poly_h(sig_P(), expr));
  if (format == "json")
    emit(json{{"input", expr}, {"dual", d}});
  else
    std::cout << poly_str(d) << "\n";
  return 0;
}

int run_basis(const std::string& format, const std::string& coset, int amax,
              bool with_fixed_sets) {
  Grading page = parse_grading(coset, 3);
  auto basis = enumerate_basis(page, amax);
  if (format == "json") {
    json arr = json::array();
    for (const auto& be : basis) {
      json j = be;
      if (with_fixed_sets)
        j["fixed_sets"] =
            fixed_sets(Poly<Coeff>::monomial(sig_P(), be.m, Coeff::one()));
      arr.push_back(std::move(j));
    }
    emit(json{{"page", page.str()}, {"elements", std::move(arr)}});
    return 0;
  }
  std::cout << "page " << page.str() << ", a <= " << amax << ": "
            << basis.size() << " basis elements\n";
  for (const auto& be : basis) {
    std::printf("  a=%-3d b=%-3d  %s", be.pos.a, be.pos.b,
                monomial_str(sig_P(), be.m).c_str());
    if (with_fixed_sets)
      std::cout << "  fixed sets "
                << triple_str(fixed_sets(
                       Poly<Coeff>::monomial(sig_P(), be.m, Coeff::one())));
    std::cout << "\n";
  }
  return 0;
}

int run_page(const std::string& format, const std::string& coset, int amax) {
  Grading page = parse_grading(coset, 3);
  auto cells = page_cells(page, amax);
  if (format == "json") {
    emit(json{{"page", page.str()}, {"cells", cells}});
    return 0;
  }
  std::map<std::pair<int, int>, int> count;
  std::vector<int> as, bs;
  for (const auto& c : cells) {
    count[{c.pos.a, c.pos.b}] = static_cast<int>(c.monomials.size());
    as.push_back(c.pos.a);
    bs.push_back(c.pos.b);
  }
  if (count.empty()) {
    std::cout << "page " << page.str() << ": no basis elements with a <= "
              << amax << "\n";
    return 0;
  }
  std::sort(as.begin(), as.end());
  as.erase(std::unique(as.begin(), as.end()), as.end());
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  std::cout << "page " << page.str() << " (rows b, columns a)\n";
  std::printf("%5s", "b\\a");
  for (int a : as) std::printf("%4d", a);
  std::printf("\n");
  for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
    std::printf("%5d", *it);
    for (int a : as) {
      auto f = count.find({a, *it});
      if (f == count.end())
        std::printf("%4s", ".");
      else
        std::printf("%4d", f->second);
    }
    std::printf("\n");
  }
  return 0;
}

int run_confluence(const std::string& format) {
  auto overlaps = confluence_overlaps();
  bool all_ok = true;
  for (const auto& ov : overlaps) all_ok = all_ok && ov.confluent;
  if (format == "json") {
    emit(json{{"overlaps", overlaps}, {"confluent", all_ok}});
    return all_ok ? 0 : 1;
  }
  for (const auto& ov : overlaps) {
    std::printf("%s/%s  lcm %-22s", ov.rule_a.c_str(), ov.rule_b.c_str(),
                monomial_str(sig_P(), ov.lcm).c_str());
    if (ov.coprime)
      std::cout << "coprime";
    else
      std::cout << "-> " << poly_str(ov.nf_a);
    std::cout << (ov.confluent ? "" : "   NOT CONFLUENT") << "\n";
  }
  std::cout << (all_ok ? "all 15 overlaps confluent\n"
                       : "confluence FAILED\n");
  return all_ok ? 0 : 1;
}

int run_units(const std::string& format) {
  auto units = unit_group();
  if (format == "json") {
    emit(json{{"eps_l", eps_l_poly()},
                      {"eps_w", eps_w_poly()},
                      {"units", units}});
    return 0;
  }
  std::cout << "eps_l = " << poly_str(eps_l_poly()) << "\n";
  std::cout << "eps_w = " << poly_str(eps_w_poly()) << "\n";
  std::cout << units.size() << " units of grading zero:\n";
  for (const auto& u : units) std::cout << "  " << u.str() << "\n";
  return 0;
}

int run_charnum(const std::string& format, const std::string& fixtures,
                const std::string& name, const std::string& cls,
                const std::string& other) {
  Manifold x = load_manifold(fixtures, name);
  const Signature& src = x.source == "bu1" ? sig_bu1() : sig_P();
  if (!other.empty()) {
    Manifold y = load_manifold(fixtures, other);
    DistinguishResult d = bordism_distinguish(x, y);
    if (format == "json") {
      emit(json{{"a", x.name}, {"b", y.name}, {"result", d}});
      return 0;
    }
    if (d.distinguished)
      std::cout << x.name << " vs " << y.name << ": distinguished by "
                << d.witness << " (" << d.value_a.str() << " vs "
                << d.value_b.str() << ")\n";
    else
      std::cout << x.name << " vs " << y.name
                << ": all relevant characteristic numbers agree\n";
    return 0;
  }
  if (!cls.empty()) {
    Coeff value = charnum(x, parse_monomial(src, cls));
    if (format == "json")
      emit(json{{"manifold", x.name},
                        {"class", cls},
                        {"value", value.str()}});
    else
      std::cout << value.str() << "\n";
    return 0;
  }
  // No class given: tabulate every relevant class of the dimension page.
  auto classes = x.source == "bu1" ? relevant_classes_bu1(x.dim)
                                   : relevant_classes(x.dim);
  if (format == "json") {
    json arr = json::array();
    for (const auto& be : classes)
      arr.push_back(json{{"class", monomial_str(src, be.m)},
                         {"value", charnum(x, be.m).str()}});
    emit(json{{"manifold", x.name},
                      {"dimension", x.dim},
                      {"numbers", std::move(arr)}});
    return 0;
  }
  std::cout << x.name << "  (dimension " << x.dim.str() << ")\n";
  for (const auto& be : classes)
    std::cout << "  <" << monomial_str(src, be.m)
              << "> = " << charnum(x, be.m).str() << "\n";
  return 0;
}

int run_verify_all(const std::string& format, const std::string& fixtures) {
  auto reports = verify_all(fixtures);
  int failures = 0;
  for (const auto& rep : reports) failures += rep.failures();
  if (format == "json") {
    emit(json{{"reports", reports}, {"failures", failures}});
    return failures ? 1 : 0;
  }
  int total = 0;
  for (const auto& rep : reports) {
    std::cout << "== " << rep.title << " ==\n";
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
      if (!c.detail.empty()) std::cout << " — " << c.detail;
      std::cout << "\n";
      ++total;
    }
  }
  std::cout << total << " checks, " << failures << " failures\n";
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bu2cc: the RO(Pi BU(2))-graded C2-equivariant cohomology ring of "
      "BU(2) — normal forms, restriction maps, bases, units, and "
      "characteristic numbers"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string expr, coset, fixtures = "data", manifold, cls, other;
  int amax = 6;
  bool steps = false, with_fixed_sets = false;

  CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", expr, "element of the presentation")->required();
  nf->add_flag("--steps", steps, "print every rewriting step");

  CLI::App* eta_cmd =
      app.add_subcommand("eta", "restriction to the fixed-component triple");
  eta_cmd->add_option("expr", expr)->required();

  CLI::App* rho_cmd =
      app.add_subcommand("rho", "underlying nonequivariant restriction");
  rho_cmd->add_option("expr", expr)->required();

  CLI::App* phi_cmd = app.add_subcommand(
      "phi", "geometric fixed points (e-inverted coefficients allowed)");
  phi_cmd->add_option("expr", expr)->required();

  CLI::App* dual_cmd =
      app.add_subcommand("dualize", "image under the duality automorphism");
  dual_cmd->add_option("expr", expr)->required();

  CLI::App* basis_cmd =
      app.add_subcommand("basis", "basis monomials of an RO(C2) page");
  basis_cmd->add_option("--page,--coset", coset, "page coset, e.g. \"O1 + 2*O2\"")
      ->required();
  basis_cmd->add_option("--amax", amax, "largest fixed degree a");
  basis_cmd->add_flag("--fixed-sets", with_fixed_sets,
                      "also print the fixed-sets triple of each element");

  CLI::App* page_cmd =
      app.add_subcommand("page", "grid of basis counts for a page");
  page_cmd->add_option("--coset,--page", coset)->required();
  page_cmd->add_option("--amax", amax);

  app.add_subcommand("confluence",
                     "resolve all overlap pairs of the rewriting system");

  app.add_subcommand("units", "the unit group of the ring");

  CLI::App* cn = app.add_subcommand(
      "charnum", "characteristic numbers of a manifold fixture");
  cn->add_option("--manifold", manifold, "fixture name, e.g. X21")->required();
  cn->add_option("--class", cls, "tautological class (monomial)");
  cn->add_option("--fixtures", fixtures, "fixtures directory");
  cn->add_option("--distinguish", other,
                 "second manifold: compare all relevant numbers");

  CLI::App* va = app.add_subcommand("verify-all",
                                    "run every verification suite");
  va->add_option("--fixtures", fixtures, "fixtures directory");

  try {
    app.parse(argc, argv);
    if (nf->parsed()) return run_nf(format, expr, steps);
    if (eta_cmd->parsed()) return run_eta(format, expr);
    if (rho_cmd->parsed()) return run_rho(format, expr);
    if (phi_cmd->parsed()) return run_phi(format, expr);
    if (dual_cmd->parsed()) return run_dualize(format, expr);
    if (basis_cmd->parsed())
      return run_basis(format, coset, amax, with_fixed_sets);
    if (page_cmd->parsed()) return run_page(format, coset, amax);
    if (app.get_subcommand("confluence")->parsed())
      return run_confluence(format);
    if (app.get_subcommand("units")->parsed()) return run_units(format);
    if (cn->parsed()) return run_charnum(format, fixtures, manifold, cls, other);
    if (va->parsed()) return run_verify_all(format, fixtures);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const bu2cc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
