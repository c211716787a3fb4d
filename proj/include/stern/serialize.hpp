#pragma once

#include <json.hpp>

#include "stern/matrix.hpp"
#include "stern/mpoly.hpp"
#include "stern/number.hpp"
#include "stern/poly.hpp"

namespace stern {

using Json = nlohmann::ordered_json;

// {"vars": 1, "coeffs": ["2", "-5", "1"]}
Json to_json(const Poly& p);
// {"vars": d, "coeffs": [[[e1, ..., ed], "num/den"], ...]}
Json to_json(const MPoly& p);
Json to_json(const Matrix& m);
Json to_json(const std::vector<Rational>& values);

Poly poly_from_json(const Json& j);
MPoly mpoly_from_json(const Json& j);

}  // namespace stern
