#pragma once

// JSON, CSV and DOT renderings of quivers, catalogs, cones and representations.

#include <string>

#include <json.hpp>

#include "iart/cone.hpp"

namespace iart {

using Json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

Json catalog_json(const PresentationCatalog& cat);
Json quiver_json(const IceQuiver& iq);
std::string quiver_dot(const IceQuiver& iq);

// Columns with their frozen vertex and group; sigma is included when nonempty.
Json cone_json(const ConeSpec& c, const PresentationCatalog& cat, const IMat& sigma = {});
ConeSpec cone_from_json(const Json& j);
// Rows are ambient vertices, one column per inequality, headed by the frozen-vertex label.
std::string cone_csv(const ConeSpec& c, const PresentationCatalog& cat);

Json rep_json(const RepZ& t);
std::string matrix_csv(const IMat& m, const std::vector<std::string>& row_labels);

}  // namespace iart
