#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geosem {

/// Axis-aligned WGS84 rectangle, closed on all sides.
struct BoundingBox {
  double min_lon = -180.0;
  double min_lat = -90.0;
  double max_lon = 180.0;
  double max_lat = 90.0;

  static BoundingBox world() { return {}; }
  /// Throws DataError unless the corners describe a valid box.
  static BoundingBox make(double min_lon, double min_lat, double max_lon,
                          double max_lat);

  bool valid() const;
  bool overlaps(const BoundingBox& o) const {
    return min_lon <= o.max_lon && o.min_lon <= max_lon &&
           min_lat <= o.max_lat && o.min_lat <= max_lat;
  }
  bool contains(const BoundingBox& o) const {
    return min_lon <= o.min_lon && o.max_lon <= max_lon &&
           min_lat <= o.min_lat && o.max_lat <= max_lat;
  }
  /// Grown by `margin` degrees on every side, clamped to the world.
  BoundingBox expanded(double margin) const;

  bool operator==(const BoundingBox&) const = default;
};

/// Parses "min_lon,min_lat,max_lon,max_lat".
BoundingBox parse_bbox(std::string_view s);
std::string format_bbox(const BoundingBox& b);

/// Offline place-name table. Names are stored tokenized and single-spaced,
/// so "San Mauro Torinese" is found as the token run san/mauro/torinese.
///
/// File: UTF-8, `name<TAB>min_lon<TAB>min_lat<TAB>max_lon<TAB>max_lat` per line.
class Gazetteer {
 public:
  static Gazetteer load(std::istream& in, const std::string& source = "<gazetteer>");
  static Gazetteer load_file(const std::filesystem::path& path);

  void add(std::string_view name, const BoundingBox& box);
  std::optional<BoundingBox> find(std::string_view name) const;
  const std::map<std::string, BoundingBox, std::less<>>& entries() const {
    return entries_;
  }
  std::size_t longest_name_tokens() const { return longest_; }

 private:
  std::map<std::string, BoundingBox, std::less<>> entries_;
  std::size_t longest_ = 0;
};

struct GeoReference {
  std::optional<std::string> place;
  std::vector<std::string> remaining;
};

/// Finds and strips the place reference in a tokenized query and maps places
/// to boxes.
class GeoResolver {
 public:
  static std::vector<std::string> default_prepositions() {
    return {"a", "in", "di", "presso"};
  }

  explicit GeoResolver(Gazetteer gazetteer,
                       std::vector<std::string> prepositions = default_prepositions());

  /// The longest token run naming a gazetteer entry (earliest start on ties)
  /// is removed together with one immediately preceding locative preposition.
  GeoReference extract_geo_reference(std::span<const std::string> tokens) const;

  /// Throws NotFoundError for places missing from the gazetteer.
  BoundingBox resolve(std::string_view place) const;

  const Gazetteer& gazetteer() const { return gazetteer_; }
  const std::vector<std::string>& prepositions() const { return prepositions_; }

 private:
  Gazetteer gazetteer_;
  std::vector<std::string> prepositions_;
};

}  // namespace geosem
