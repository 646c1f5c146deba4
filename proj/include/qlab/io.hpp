#pragma once

#include <string>

#include <json.hpp>

#include "qlab/hua.hpp"
#include "qlab/series.hpp"

namespace qlab {

using nlohmann::json;

// Quiver document: {"vertices":["1","2"],"arrows":[["1","2"]]}
Quiver quiver_from_json(const json& doc);
json quiver_to_json(const Quiver& q);
Quiver load_quiver(const std::string& path);

// Series records, exponents in lexicographic order:
// [{"exponent":[1,0],"coefficient":"(t^2+1)/(t-1)"}, ...]
json series_to_json(const SeriesRF& s);
json series_to_json(const SeriesQ& s);

// Kac table records in graded lexicographic order:
// [{"dim":[1,1],"poly":[1,1]}, ...] with coefficients lowest degree first.
json kac_table_to_json(const KacTable& table);

DimVector parse_dim_list(const std::string& csv); // "1,2,0" -> {1,2,0}

} // namespace qlab
