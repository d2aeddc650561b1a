#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "geosem/geo_resolver.hpp"

namespace geosem {

struct Position {
  double lon = 0;
  double lat = 0;
  bool operator==(const Position&) const = default;
};

struct Point {
  Position position;
  bool operator==(const Point&) const = default;
};
struct LineString {
  std::vector<Position> positions;
  bool operator==(const LineString&) const = default;
};
struct Polygon {
  std::vector<std::vector<Position>> rings;  // exterior first
  bool operator==(const Polygon&) const = default;
};
struct MultiPolygon {
  std::vector<Polygon> polygons;
  bool operator==(const MultiPolygon&) const = default;
};

using Geometry = std::variant<Point, LineString, Polygon, MultiPolygon>;

/// Smallest box enclosing every coordinate of the geometry.
BoundingBox bbox_of(const Geometry& g);

const char* geometry_type_name(const Geometry& g);

/// A geographic feature classified under one ontology concept.
struct GeoItem {
  std::string id;
  std::string concept_id;
  Geometry geometry;
  std::map<std::string, std::string> properties;
  BoundingBox bbox;

  bool operator==(const GeoItem&) const = default;
};

}  // namespace geosem
