#pragma once

#include "bmv/matrix.hpp"
#include "bmv/poly.hpp"
#include "bmv/rational.hpp"

#include <json.hpp>

namespace bmv {

using Json = nlohmann::ordered_json;

/// {"var":"x","terms":[[degree,"num/den"],...]} with ascending degrees.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Row-major 3x3 array of polynomial objects.
Json mat3_to_json(const Mat3& m);
Mat3 mat3_from_json(const Json& j);

}  // namespace bmv
