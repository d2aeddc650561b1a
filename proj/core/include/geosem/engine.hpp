#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "geosem/interpreter.hpp"
#include "geosem/item_store.hpp"
#include "geosem/qualifier_filter.hpp"

namespace geosem {

struct SearchSettings {
  SimilarityParams similarity;
  /// Degrees added around an item's box when looking for related items.
  double related_radius = 0.005;
};

struct SearchResult {
  InterpretationOutcome outcome;
  /// Filtered items, ordered by id. Empty unless the outcome is Results.
  std::vector<GeoItem> items;
  /// Items in the box before qualifier filtering.
  std::size_t retrieved = 0;
};

/// Interpretation, retrieval and qualifier filtering wired together.
class SearchEngine {
 public:
  SearchEngine(std::shared_ptr<const Interpreter> interpreter,
               std::shared_ptr<const ItemStore> store, SearchSettings settings = {});

  SearchResult search(std::string_view query,
                      const std::optional<BoundingBox>& viewport = std::nullopt,
                      const std::optional<ConceptIds>& selected = std::nullopt) const;

  /// Instances of the concepts inside the box, filtered by the qualifier set.
  std::vector<GeoItem> retrieve(const Results& results, std::size_t* retrieved = nullptr) const;

  const Interpreter& interpreter() const { return *interpreter_; }
  const ItemStore& store() const { return *store_; }
  const Ontology& ontology() const { return interpreter_->ontology(); }
  const SearchSettings& settings() const { return settings_; }

 private:
  std::shared_ptr<const Interpreter> interpreter_;
  std::shared_ptr<const ItemStore> store_;
  SearchSettings settings_;
};

}  // namespace geosem
