#pragma once

// Loads the bundled fixture datasets (data/fixtures/it and data/fixtures/en).

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geosem/config.hpp"

#ifndef GEOSEM_FIXTURE_DIR
#error "GEOSEM_FIXTURE_DIR must point at data/fixtures"
#endif

namespace fixture {

inline std::filesystem::path dir(const std::string& lang) {
  return std::filesystem::path(GEOSEM_FIXTURE_DIR) / lang;
}

// Item files of the Italian fixture and the concept each is ingested under
// (nullopt: every feature names its own concept).
inline const std::vector<std::pair<std::string, std::optional<std::string>>>& item_files() {
  static const std::vector<std::pair<std::string, std::optional<std::string>>> files = {
      {"hospitals.geojson", "Ospedale"},
      {"schools.geojson", "Scuola"},
      {"bus_stops.geojson", "FermataBus"},
      {"museums.geojson", "Museo"},
      {"parks.geojson", std::nullopt},
      {"places_of_worship.geojson", "LuogoDiCulto"},
      {"libraries.geojson", "Biblioteca"},
  };
  return files;
}

inline geosem::Config config(const std::string& lang) {
  auto c = geosem::Config::load_file(dir(lang) / "geosem.json");
  c.store.clear();  // never pick up a snapshot left behind by manual runs
  return c;
}

// Italian runtime with every item file ingested.
inline geosem::Runtime load_it(const geosem::SimilarityParams& similarity = {}) {
  auto c = config("it");
  c.similarity = similarity;
  auto rt = geosem::load_runtime(c);
  for (const auto& [file, concept_id] : item_files()) {
    rt.store->ingest_file(dir("it") / "items" / file, concept_id);
  }
  return rt;
}

// English runtime; the English fixture has no items.
inline geosem::Runtime load_en() { return geosem::load_runtime(config("en")); }

}  // namespace fixture
