#pragma once

// GeoJSON (RFC 7946) encoding of geometries and items. Private to the core
// library so that the JSON dependency stays out of the public headers.

#include "geosem/geo_item.hpp"
#include "json.hpp"

namespace geosem::geojson {

/// Throws std::invalid_argument with a description of what is malformed.
Geometry parse_geometry(const nlohmann::json& j);
nlohmann::json to_json(const Geometry& g);

/// Feature with `id`, `geometry` and `properties`; the concept id is added
/// as the `concept` property.
nlohmann::json to_feature(const GeoItem& item);
nlohmann::json to_feature_collection(const std::vector<GeoItem>& items);

}  // namespace geosem::geojson
