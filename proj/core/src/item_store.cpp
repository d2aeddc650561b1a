#include "geosem/item_store.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "geojson.hpp"
#include "geosem/errors.hpp"

namespace geosem {

namespace {

using nlohmann::json;

constexpr double kCellDegrees = 0.01;
constexpr std::int64_t kLatCells = 20000;
// Items covering more cells than this live in a side list scanned on every query.
constexpr std::int64_t kMaxCellsPerItem = 256;
constexpr int kSnapshotVersion = 1;
constexpr const char* kSnapshotFormat = "geosem-item-store";

std::int64_t cell_x(double lon) {
  return static_cast<std::int64_t>(std::floor((lon + 180.0) / kCellDegrees));
}
std::int64_t cell_y(double lat) {
  return static_cast<std::int64_t>(std::floor((lat + 90.0) / kCellDegrees));
}

std::string generated_id(const std::string& concept_id, std::size_t ordinal) {
  // FNV-1a over "<concept>#<ordinal>"
  std::uint64_t h = 1469598103934665603ULL;
  const std::string key = concept_id + "#" + std::to_string(ordinal);
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return concept_id + "-" + buf;
}

std::string property_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

ItemStore::ItemStore(std::shared_ptr<const Ontology> ontology)
    : ontology_(std::move(ontology)) {
  if (!ontology_) throw InvalidArgument("item store needs an ontology");
}

IngestReport ItemStore::ingest(std::string_view document,
                               const std::optional<std::string>& concept_id,
                               const std::string& source) {
  if (concept_id && !ontology_->contains(*concept_id)) {
    throw NotFoundError("unknown concept '" + *concept_id + "'");
  }
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& e) {
    throw ParseError(source, 0, e.what());
  }
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" ||
      !doc.contains("features") || !doc["features"].is_array()) {
    throw ParseError(source, 0, "not a GeoJSON FeatureCollection");
  }

  IngestReport report;
  std::vector<GeoItem> staged;
  const auto& features = doc["features"];
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& f = features[i];
    auto fail = [&](const std::string& what) -> ParseError {
      return ParseError(source, 0, "feature " + std::to_string(i) + ": " + what);
    };
    if (!f.is_object() || f.value("type", "") != "Feature") {
      throw fail("not a Feature object");
    }
    const json props = f.contains("properties") && f["properties"].is_object()
                           ? f["properties"]
                           : json::object();
    GeoItem item;
    if (concept_id) {
      item.concept_id = *concept_id;
    } else if (props.contains("concept") && props["concept"].is_string()) {
      item.concept_id = props["concept"].get<std::string>();
    } else {
      throw fail("no concept given and no 'concept' property");
    }
    const Concept* concept_def = ontology_->find(item.concept_id);
    if (!concept_def) throw NotFoundError("unknown concept '" + item.concept_id + "'");

    if (!f.contains("geometry") || f["geometry"].is_null()) {
      throw fail("missing geometry");
    }
    try {
      item.geometry = geojson::parse_geometry(f["geometry"]);
    } catch (const std::invalid_argument& e) {
      throw fail(std::string("malformed geometry: ") + e.what());
    }
    item.bbox = bbox_of(item.geometry);

    if (auto id = f.find("id"); id != f.end() && (id->is_string() || id->is_number())) {
      item.id = id->is_string() ? id->get<std::string>() : id->dump();
    } else {
      item.id = generated_id(item.concept_id, i);
    }

    const auto& schema = concept_def->property_schema;
    for (const auto& [name, value] : props.items()) {
      if (name == "concept" || value.is_null()) continue;
      if (name != "name" &&
          std::find(schema.begin(), schema.end(), name) == schema.end()) {
        ++report.dropped_properties;
        report.warnings.push_back("item " + item.id + ": property '" + name +
                                  "' is not in the schema of " +
                                  item.concept_id + ", dropped");
        continue;
      }
      item.properties[name] = property_text(value);
    }
    staged.push_back(std::move(item));
  }

  std::unique_lock lock(mutex_);
  for (auto& item : staged) {
    std::string id = item.id;
    items_.insert_or_assign(std::move(id), std::move(item));
  }
  report.stored = staged.size();
  rebuild_index();
  return report;
}

IngestReport ItemStore::ingest_file(const std::filesystem::path& path,
                                    const std::optional<std::string>& concept_id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ingest(ss.str(), concept_id, path.string());
}

void ItemStore::rebuild_index() {
  by_concept_.clear();
  grid_.clear();
  oversized_.clear();
  for (const auto& [id, item] : items_) {
    by_concept_[item.concept_id].push_back(&item);
    const auto x0 = cell_x(item.bbox.min_lon), x1 = cell_x(item.bbox.max_lon);
    const auto y0 = cell_y(item.bbox.min_lat), y1 = cell_y(item.bbox.max_lat);
    if ((x1 - x0 + 1) * (y1 - y0 + 1) > kMaxCellsPerItem) {
      oversized_.push_back(&item);
      continue;
    }
    for (auto x = x0; x <= x1; ++x) {
      for (auto y = y0; y <= y1; ++y) grid_[x * kLatCells + y].push_back(&item);
    }
  }
}

std::vector<const GeoItem*> ItemStore::candidates(const ConceptIds& concepts,
                                                  const BoundingBox& box) const {
  std::size_t concept_items = 0;
  for (const auto& c : concepts) {
    if (auto it = by_concept_.find(c); it != by_concept_.end()) {
      concept_items += it->second.size();
    }
  }
  const auto x0 = cell_x(box.min_lon), x1 = cell_x(box.max_lon);
  const auto y0 = cell_y(box.min_lat), y1 = cell_y(box.max_lat);
  const auto cells = static_cast<std::size_t>((x1 - x0 + 1) * (y1 - y0 + 1));

  std::vector<const GeoItem*> out;
  if (cells >= concept_items) {
    for (const auto& c : concepts) {
      auto it = by_concept_.find(c);
      if (it == by_concept_.end()) continue;
      for (const GeoItem* item : it->second) {
        if (item->bbox.overlaps(box)) out.push_back(item);
      }
    }
  } else {
    std::set<const GeoItem*> seen;
    auto consider = [&](const GeoItem* item) {
      if (concepts.contains(item->concept_id) && item->bbox.overlaps(box) &&
          seen.insert(item).second) {
        out.push_back(item);
      }
    };
    for (auto x = x0; x <= x1; ++x) {
      for (auto y = y0; y <= y1; ++y) {
        auto it = grid_.find(x * kLatCells + y);
        if (it == grid_.end()) continue;
        for (const GeoItem* item : it->second) consider(item);
      }
    }
    for (const GeoItem* item : oversized_) consider(item);
  }
  std::sort(out.begin(), out.end(),
            [](const GeoItem* a, const GeoItem* b) { return a->id < b->id; });
  return out;
}

std::vector<GeoItem> ItemStore::instances_in_bbox(const ConceptIds& concepts,
                                                  const BoundingBox& box) const {
  for (const auto& c : concepts) {
    if (!ontology_->contains(c)) throw NotFoundError("unknown concept '" + c + "'");
  }
  if (!box.valid()) throw InvalidArgument("invalid bounding box " + format_bbox(box));
  std::shared_lock lock(mutex_);
  std::vector<GeoItem> out;
  for (const GeoItem* item : candidates(concepts, box)) out.push_back(*item);
  return out;
}

std::vector<RelatedItem> ItemStore::related_items(std::string_view item_id,
                                                  double radius) const {
  if (!(radius >= 0.0)) throw InvalidArgument("radius must be non-negative");
  std::shared_lock lock(mutex_);
  auto it = items_.find(item_id);
  if (it == items_.end()) {
    throw NotFoundError("unknown item '" + std::string(item_id) + "'");
  }
  const GeoItem& focus = it->second;
  const BoundingBox area = focus.bbox.expanded(radius);
  std::vector<RelatedItem> out;
  for (const auto& rel : ontology_->related_concepts(focus.concept_id)) {
    for (const GeoItem* item : candidates({rel.target}, area)) {
      if (item->id != focus.id) out.push_back({rel.name, *item});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.relation, a.item.id) < std::tie(b.relation, b.item.id);
  });
  return out;
}

std::optional<GeoItem> ItemStore::find(std::string_view item_id) const {
  std::shared_lock lock(mutex_);
  auto it = items_.find(item_id);
  if (it == items_.end()) return std::nullopt;
  return it->second;
}

std::size_t ItemStore::size() const {
  std::shared_lock lock(mutex_);
  return items_.size();
}

std::vector<std::string> ItemStore::ids() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  out.reserve(items_.size());
  for (const auto& [id, _] : items_) out.push_back(id);
  return out;
}

std::string ItemStore::snapshot() const {
  std::shared_lock lock(mutex_);
  std::string out = json{{"format", kSnapshotFormat}, {"version", kSnapshotVersion}}.dump();
  out += '\n';
  for (const auto& [id, item] : items_) {
    json props = json::object();
    for (const auto& [k, v] : item.properties) props[k] = v;
    out += json{{"id", item.id},
                {"concept", item.concept_id},
                {"geometry", geojson::to_json(item.geometry)},
                {"properties", std::move(props)}}
               .dump();
    out += '\n';
  }
  return out;
}

void ItemStore::save_snapshot(const std::filesystem::path& path) const {
  const std::string data = snapshot();
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << data;
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void ItemStore::restore(std::string_view snapshot, const std::string& source) {
  std::istringstream in{std::string(snapshot)};
  std::string line;
  std::size_t lineno = 0;
  std::map<std::string, GeoItem, std::less<>> loaded;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(source, lineno, e.what());
    }
    if (!header_seen) {
      if (rec.value("format", "") != kSnapshotFormat) {
        throw ParseError(source, lineno, "not an item store snapshot");
      }
      if (rec.value("version", 0) != kSnapshotVersion) {
        throw ParseError(source, lineno,
                         "unsupported snapshot version " + rec["version"].dump());
      }
      header_seen = true;
      continue;
    }
    GeoItem item;
    try {
      item.id = rec.at("id").get<std::string>();
      item.concept_id = rec.at("concept").get<std::string>();
      item.geometry = geojson::parse_geometry(rec.at("geometry"));
      for (const auto& [k, v] : rec.at("properties").items()) {
        item.properties[k] = v.get<std::string>();
      }
    } catch (const json::exception& e) {
      throw ParseError(source, lineno, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, lineno, e.what());
    }
    if (!ontology_->contains(item.concept_id)) {
      throw ParseError(source, lineno, "unknown concept '" + item.concept_id + "'");
    }
    item.bbox = bbox_of(item.geometry);
    std::string id = item.id;
    loaded.insert_or_assign(std::move(id), std::move(item));
  }
  if (!header_seen) throw ParseError(source, 0, "empty snapshot");
  std::unique_lock lock(mutex_);
  items_ = std::move(loaded);
  rebuild_index();
}

void ItemStore::restore_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open snapshot " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  restore(ss.str(), path.string());
}

}  // namespace geosem
