#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "geosem/geo_item.hpp"
#include "geosem/ontology.hpp"

namespace geosem {

struct IngestReport {
  std::size_t stored = 0;
  std::size_t dropped_properties = 0;
  std::vector<std::string> warnings;
};

struct RelatedItem {
  std::string relation;
  GeoItem item;
};

/// In-memory store of geographic items indexed by concept and by a uniform
/// grid over item bounding boxes. Spatial predicates use bounding-box overlap
/// (closed intervals), not exact geometric intersection.
///
/// Any number of readers may query concurrently; ingest and restore take
/// exclusive access and publish all of a document's items at once.
class ItemStore {
 public:
  explicit ItemStore(std::shared_ptr<const Ontology> ontology);
  ItemStore(const ItemStore&) = delete;
  ItemStore& operator=(const ItemStore&) = delete;

  /// Stores every feature of a GeoJSON FeatureCollection. With `concept_id`
  /// absent each feature must carry a `concept` property. Feature ids are
  /// kept; missing ids are derived from the concept id and the feature's
  /// ordinal. Re-ingesting a document is idempotent. Properties outside the
  /// concept schema (plus `name`) are dropped with a warning. Nothing is
  /// stored when any feature is malformed.
  IngestReport ingest(std::string_view document,
                      const std::optional<std::string>& concept_id,
                      const std::string& source = "<geojson>");
  IngestReport ingest_file(const std::filesystem::path& path,
                           const std::optional<std::string>& concept_id);

  /// Items of the given concepts whose box overlaps `box`, ordered by id.
  std::vector<GeoItem> instances_in_bbox(const ConceptIds& concepts,
                                         const BoundingBox& box) const;

  /// Instances of the concepts related to the item's concept (inherited
  /// relations included) whose boxes touch the item's box grown by `radius`
  /// degrees. Ordered by (relation, id); the item itself is never listed.
  std::vector<RelatedItem> related_items(std::string_view item_id,
                                         double radius) const;

  std::optional<GeoItem> find(std::string_view item_id) const;
  std::size_t size() const;
  std::vector<std::string> ids() const;
  const Ontology& ontology() const { return *ontology_; }

  /// Versioned JSON snapshot, items ordered by id.
  std::string snapshot() const;
  void save_snapshot(const std::filesystem::path& path) const;
  /// Replaces the whole content with the snapshot's items.
  void restore(std::string_view snapshot, const std::string& source = "<snapshot>");
  void restore_file(const std::filesystem::path& path);

 private:
  using CellKey = std::int64_t;

  void rebuild_index();
  std::vector<const GeoItem*> candidates(const ConceptIds& concepts,
                                         const BoundingBox& box) const;

  std::shared_ptr<const Ontology> ontology_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, GeoItem, std::less<>> items_;
  std::map<std::string, std::vector<const GeoItem*>, std::less<>> by_concept_;
  std::unordered_map<CellKey, std::vector<const GeoItem*>> grid_;
  std::vector<const GeoItem*> oversized_;
};

}  // namespace geosem
