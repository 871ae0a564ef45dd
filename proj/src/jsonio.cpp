#include "bu2cc/jsonio.hpp"

namespace bu2cc {

using nlohmann::json;

void to_json(json& j, const RO2& v) { j = json{{"a", v.a}, {"b", v.b}}; }

void to_json(json& j, const Grading& v) { j = v.str(); }

void to_json(json& j, const Poly<Coeff>& v) { j = poly_str(v); }
void to_json(json& j, const Poly<FixedScalar>& v) { j = poly_str(v); }
void to_json(json& j, const Poly<NoneqScalar>& v) { j = poly_str(v); }
void to_json(json& j, const Poly<long long>& v) { j = poly_str(v); }

void to_json(json& j, const Overlap& v) {
  j = json{{"rules", json::array({v.rule_a, v.rule_b})},
           {"lcm", monomial_str(sig_P(), v.lcm)},
           {"coprime", v.coprime},
           {"confluent", v.confluent},
           {"chain_a", v.chain_a},
           {"chain_b", v.chain_b},
           {"normal_form_a", v.nf_a},
           {"normal_form_b", v.nf_b}};
}

void to_json(json& j, const BasisElement& v) {
  j = json{{"monomial", monomial_str(sig_P(), v.m)}, {"position", v.pos}};
}

void to_json(json& j, const PageCell& v) {
  json ms = json::array();
  for (const auto& m : v.monomials) ms.push_back(monomial_str(sig_P(), m));
  j = json{{"position", v.pos}, {"monomials", std::move(ms)}};
}

void to_json(json& j, const GradingZero& v) {
  j = json{{"u1", v.u1}, {"ug", v.ug}, {"ul", v.ul}, {"uw", v.uw},
           {"str", v.str()}};
}

void to_json(json& j, const PsiEntry& v) {
  j = json{{"label", v.label}, {"target", v.target}, {"value", v.value}};
}

void to_json(json& j, const DistinguishResult& v) {
  j = json{{"distinguished", v.distinguished},
           {"witness", v.witness},
           {"value_a", v.value_a.str()},
           {"value_b", v.value_b.str()}};
}

void to_json(json& j, const CheckResult& v) {
  j = json{{"name", v.name}, {"pass", v.pass}};
  if (!v.detail.empty()) j["detail"] = v.detail;
}

void to_json(json& j, const VerifyReport& v) {
  j = json{{"title", v.title},
           {"pass", v.all_pass()},
           {"checks", v.checks}};
}

}  // namespace bu2cc
