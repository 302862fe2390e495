#pragma once

#include <json.hpp>

#include "qroot3/expr.hpp"

// Rationals as "num/den" strings, scalars as {"r0", "r1"}, elements as {"algebra", "coeffs"}.
namespace qroot3::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const Cyc& c);
Cyc cyc_from_json(const Json& j);

Json element_to_json(const CycVector& v, expr::Context ctx);
// Returns the coefficients and sets ctx from the "algebra" field; throws std::invalid_argument.
CycVector element_from_json(const Json& j, expr::Context* ctx = nullptr);

Json matrix_to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const Json& j);

}  // namespace qroot3::json_io
