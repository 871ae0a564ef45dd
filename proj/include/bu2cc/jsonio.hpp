// jsonio.hpp — JSON views of the engine's value types.
//
// Ring elements are serialized as expression strings in the grammar of
// expr.hpp, so every JSON payload round-trips through the parser; gradings
// serialize as their display string for the same reason.  Structured types
// (overlaps, basis pages, verification reports) become small objects whose
// leaves are those strings.
#pragma once

#include "json.hpp"

#include "bu2cc/charnum.hpp"
#include "bu2cc/expr.hpp"
#include "bu2cc/maps.hpp"
#include "bu2cc/rewrite.hpp"
#include "bu2cc/units.hpp"
#include "bu2cc/verify.hpp"

namespace bu2cc {

void to_json(nlohmann::json& j, const RO2& v);
void to_json(nlohmann::json& j, const Grading& v);

void to_json(nlohmann::json& j, const Poly<Coeff>& v);
void to_json(nlohmann::json& j, const Poly<FixedScalar>& v);
void to_json(nlohmann::json& j, const Poly<NoneqScalar>& v);
void to_json(nlohmann::json& j, const Poly<long long>& v);

template <class S>
void to_json(nlohmann::json& j, const Triple<S>& v) {
  j = nlohmann::json::array({v.c0, v.c1, v.c2});
}

void to_json(nlohmann::json& j, const Overlap& v);
void to_json(nlohmann::json& j, const BasisElement& v);
void to_json(nlohmann::json& j, const PageCell& v);
void to_json(nlohmann::json& j, const GradingZero& v);
void to_json(nlohmann::json& j, const PsiEntry& v);
void to_json(nlohmann::json& j, const DistinguishResult& v);
void to_json(nlohmann::json& j, const CheckResult& v);
void to_json(nlohmann::json& j, const VerifyReport& v);

}  // namespace bu2cc
