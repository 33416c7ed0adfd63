#include "bmv/serialize.hpp"

#include "bmv/errors.hpp"

namespace bmv {

Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [d, c] : p.terms()) terms.push_back(Json::array({d, to_string(c)}));
  Json j;
  j["var"] = "x";
  j["terms"] = std::move(terms);
  return j;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_object() || j.value("var", "") != "x" || !j.contains("terms") ||
      !j["terms"].is_array())
    throw ParseError("polynomial JSON must be {\"var\":\"x\",\"terms\":[...]}", 0);
  Poly p;
  int previous = -1;
  std::size_t index = 0;
  for (const auto& term : j["terms"]) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
        !term[1].is_string())
      throw ParseError("malformed polynomial term", index);
    const int degree = term[0].get<int>();
    if (degree <= previous) throw ParseError("polynomial terms must ascend by degree", index);
    Rational c = parse_rational(term[1].get<std::string>());
    if (c == 0) throw ParseError("stored zero coefficient", index);
    p += Poly::monomial(c, degree);
    previous = degree;
    ++index;
  }
  return p;
}

Json mat3_to_json(const Mat3& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < 3; ++j) row.push_back(poly_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat3 mat3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("matrix JSON must have 3 rows", 0);
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw ParseError("matrix row must have 3 entries", i);
    for (std::size_t k = 0; k < 3; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = poly_from_json(j[i][k]);
  }
  return m;
}

}  // namespace bmv
