#include "geojson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geosem {

namespace {

void extend(BoundingBox& b, const Position& p) {
  b.min_lon = std::min(b.min_lon, p.lon);
  b.min_lat = std::min(b.min_lat, p.lat);
  b.max_lon = std::max(b.max_lon, p.lon);
  b.max_lat = std::max(b.max_lat, p.lat);
}

}  // namespace

BoundingBox bbox_of(const Geometry& g) {
  BoundingBox b{180.0, 90.0, -180.0, -90.0};
  std::visit(
      [&](const auto& geom) {
        using T = std::decay_t<decltype(geom)>;
        if constexpr (std::is_same_v<T, Point>) {
          extend(b, geom.position);
        } else if constexpr (std::is_same_v<T, LineString>) {
          for (const auto& p : geom.positions) extend(b, p);
        } else if constexpr (std::is_same_v<T, Polygon>) {
          for (const auto& r : geom.rings)
            for (const auto& p : r) extend(b, p);
        } else {
          for (const auto& poly : geom.polygons)
            for (const auto& r : poly.rings)
              for (const auto& p : r) extend(b, p);
        }
      },
      g);
  return b;
}

const char* geometry_type_name(const Geometry& g) {
  static constexpr const char* kNames[] = {"Point", "LineString", "Polygon",
                                           "MultiPolygon"};
  return kNames[g.index()];
}

namespace geojson {

namespace {

using nlohmann::json;

Position parse_position(const json& j) {
  if (!j.is_array() || j.size() < 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("position must be [lon, lat]");
  }
  Position p{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(p.lon) || !std::isfinite(p.lat) || p.lon < -180 ||
      p.lon > 180 || p.lat < -90 || p.lat > 90) {
    throw std::invalid_argument("position out of WGS84 range");
  }
  return p;
}

std::vector<Position> parse_positions(const json& j, std::size_t min_count,
                                      const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Position> out;
  out.reserve(j.size());
  for (const auto& p : j) out.push_back(parse_position(p));
  if (out.size() < min_count) {
    throw std::invalid_argument(std::string(what) + " needs at least " +
                                std::to_string(min_count) + " positions");
  }
  return out;
}

Polygon parse_polygon(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("polygon needs at least one ring");
  }
  Polygon poly;
  for (const auto& r : j) {
    auto ring = parse_positions(r, 4, "linear ring");
    if (!(ring.front() == ring.back())) {
      throw std::invalid_argument("linear ring is not closed");
    }
    poly.rings.push_back(std::move(ring));
  }
  return poly;
}

json positions_json(const std::vector<Position>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back({p.lon, p.lat});
  return a;
}

json polygon_json(const Polygon& poly) {
  json a = json::array();
  for (const auto& r : poly.rings) a.push_back(positions_json(r));
  return a;
}

}  // namespace

Geometry parse_geometry(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("geometry must be an object");
  auto type = j.find("type");
  auto coords = j.find("coordinates");
  if (type == j.end() || !type->is_string()) {
    throw std::invalid_argument("geometry has no type");
  }
  if (coords == j.end()) throw std::invalid_argument("geometry has no coordinates");
  const auto t = type->get<std::string>();
  if (t == "Point") return Point{parse_position(*coords)};
  if (t == "LineString") return LineString{parse_positions(*coords, 2, "LineString")};
  if (t == "Polygon") return parse_polygon(*coords);
  if (t == "MultiPolygon") {
    if (!coords->is_array() || coords->empty()) {
      throw std::invalid_argument("MultiPolygon needs at least one polygon");
    }
    MultiPolygon mp;
    for (const auto& p : *coords) mp.polygons.push_back(parse_polygon(p));
    return mp;
  }
  throw std::invalid_argument("unsupported geometry type '" + t + "'");
}

json to_json(const Geometry& g) {
  json coords = std::visit(
      [](const auto& geom) -> json {
        using T = std::decay_t<decltype(geom)>;
        if constexpr (std::is_same_v<T, Point>) {
          return json::array({geom.position.lon, geom.position.lat});
        } else if constexpr (std::is_same_v<T, LineString>) {
          return positions_json(geom.positions);
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return polygon_json(geom);
        } else {
          json a = json::array();
          for (const auto& p : geom.polygons) a.push_back(polygon_json(p));
          return a;
        }
      },
      g);
  return json{{"type", geometry_type_name(g)}, {"coordinates", std::move(coords)}};
}

json to_feature(const GeoItem& item) {
  json props = json::object();
  for (const auto& [k, v] : item.properties) props[k] = v;
  props["concept"] = item.concept_id;
  return json{{"type", "Feature"},
              {"id", item.id},
              {"geometry", to_json(item.geometry)},
              {"properties", std::move(props)}};
}

json to_feature_collection(const std::vector<GeoItem>& items) {
  json features = json::array();
  for (const auto& i : items) features.push_back(to_feature(i));
  return json{{"type", "FeatureCollection"}, {"features", std::move(features)}};
}

}  // namespace geojson
}  // namespace geosem
