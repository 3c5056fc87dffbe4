#pragma once

// JSON forms used by the CLI and the fixture files.
//
//   Scalar:      {"num": [{"coeff": "<int>", "exp": [a,b,c]}, ...], "den": [...]}
//                with exponents on (q^{1/2}, t^{1/2}, u);
//   polynomial:  [{"partition": [doubled parts], "coeff": <Scalar>}, ...]

#include <string>

#include <json.hpp>

#include "supermac/superpoly.hpp"

namespace supermac {

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const SuperPolynomial& f);
SuperPolynomial poly_from_json(const nlohmann::json& j);

}  // namespace supermac
