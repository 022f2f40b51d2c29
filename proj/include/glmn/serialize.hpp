#pragma once

#include "glmn/ehrhart.hpp"
#include "glmn/gl11.hpp"
#include "glmn/invariants.hpp"
#include "glmn/linalg.hpp"
#include "glmn/suzhang.hpp"
#include "glmn/weight.hpp"

#include <json.hpp>

#include <string>

namespace glmn {

// Exact values are emitted as strings ("p" or "p/q") so no precision is lost.
nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Weight& w);               // {"m","n","coeffs"}
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Root& r);                 // [i, j]
nlohmann::json to_json(const BlockDescriptor& b);      // {"k","core_left","core_right","omega"}
BlockDescriptor block_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InvariantReport& r);
InvariantReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuasiPolynomial& q);      // {"period","coefficients"}
QuasiPolynomial quasipolynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WeightPairSet& s);
nlohmann::json to_json(const ResolutionTrace& t);      // [{"degree","summands","total_dim"}]

// Dense rational CSV, one row per line.
std::string to_csv(const Matrix& m);

} // namespace glmn
