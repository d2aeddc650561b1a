#include "geosem/engine.hpp"

namespace geosem {

SearchEngine::SearchEngine(std::shared_ptr<const Interpreter> interpreter,
                           std::shared_ptr<const ItemStore> store,
                           SearchSettings settings)
    : interpreter_(std::move(interpreter)),
      store_(std::move(store)),
      settings_(settings) {
  if (!interpreter_ || !store_) {
    throw InvalidArgument("search engine needs an interpreter and a store");
  }
  settings_.similarity.validate();
  if (!(settings_.related_radius >= 0.0)) {
    throw InvalidArgument("related-items radius must be non-negative");
  }
}

std::vector<GeoItem> SearchEngine::retrieve(const Results& results,
                                            std::size_t* retrieved) const {
  auto items = store_->instances_in_bbox(results.concepts, results.bbox);
  if (retrieved) *retrieved = items.size();
  return filter_items(std::move(items), results.qualifier_set, settings_.similarity);
}

SearchResult SearchEngine::search(std::string_view query,
                                  const std::optional<BoundingBox>& viewport,
                                  const std::optional<ConceptIds>& selected) const {
  SearchResult out{interpreter_->interpret(query, viewport, selected), {}, 0};
  if (const auto* r = std::get_if<Results>(&out.outcome)) {
    out.items = retrieve(*r, &out.retrieved);
  }
  return out;
}

}  // namespace geosem
