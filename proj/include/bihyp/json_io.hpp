#pragma once

#include <json.hpp>

#include "bihyp/bihyperbolic.hpp"
#include "bihyp/gauge.hpp"
#include "bihyp/hvector.hpp"
#include "bihyp/metric.hpp"
#include "bihyp/report.hpp"
#include "bihyp/seminorm.hpp"
#include "bihyp/sets.hpp"

namespace bihyp {

using Json = nlohmann::json;

// Readers throw InvalidInput on malformed descriptors.

/// {"canonical":[x,y,z,w]}, {"idempotent":[l1..l4]}, a bare 4-array
/// (idempotent), a real number, or canonical text such as "1 + 2 j1".
Bihyperbolic number_from_json(const Json& j);
Json number_to_json(const Bihyperbolic& b);

/// {"dim":n,"comps":[[..],[..],[..],[..]]}, {"entries":[numbers]}, or a
/// single number (dimension 1).
HVector hvector_from_json(const Json& j);
Json hvector_to_json(const HVector& x);

/// 1, 2, "inf" (also "Infinity", "PInf", "P1", "P2").
ComponentNorm component_norm_from_json(const Json& j);
Json component_norm_to_json(ComponentNorm p);

RealConvexBody body_from_json(const Json& j);
Json body_to_json(const RealConvexBody& b);

H2Set set_from_json(const Json& j);
Json set_to_json(const H2Set& s);
Product product_from_json(const Json& j);

Seminorm seminorm_from_json(const Json& j);
Json seminorm_to_json(const Seminorm& p);
/// Array of seminorm descriptors, or {"family":[...]}.
SeminormFamily family_from_json(const Json& j);
Json family_to_json(const SeminormFamily& f);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);
Json report_to_json(const CheckReport& r);
Json gauge_to_json(const GaugeResult& g);

}  // namespace bihyp
