#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "geosem/engine.hpp"

namespace geosem {

/// Deployment configuration. Sources, lowest precedence first: built-in
/// defaults, a JSON config file, GEOSEM_* environment variables, then
/// whatever the caller sets explicitly (CLI flags).
///
/// Config file keys: ontology, lemmas, stopwords, synonyms, gazetteer, store,
/// prepositions, beta, gamma, threshold_rounding ("ceil" | "exact"),
/// related_radius, default_bbox ([min_lon, min_lat, max_lon, max_lat] or
/// "a,b,c,d"), listen ("host:port"). Relative paths are resolved against the
/// config file's directory.
struct Config {
  std::filesystem::path ontology;
  std::filesystem::path lemmas;
  std::filesystem::path stopwords;
  std::filesystem::path synonyms;
  std::filesystem::path gazetteer;
  std::filesystem::path store;
  std::vector<std::string> prepositions = GeoResolver::default_prepositions();
  SimilarityParams similarity;
  double related_radius = 0.005;
  BoundingBox default_bbox = BoundingBox::world();
  std::string listen = "127.0.0.1:8080";

  static Config from_json(std::string_view json_text,
                          const std::filesystem::path& base_dir = {});
  static Config load_file(const std::filesystem::path& path);

  using EnvLookup = std::function<const char*(const char*)>;
  /// GEOSEM_ONTOLOGY, GEOSEM_LEMMAS, GEOSEM_STOPWORDS, GEOSEM_SYNONYMS,
  /// GEOSEM_GAZETTEER, GEOSEM_STORE, GEOSEM_PREPOSITIONS (comma list),
  /// GEOSEM_BETA, GEOSEM_GAMMA, GEOSEM_ROUNDING, GEOSEM_RADIUS, GEOSEM_BBOX,
  /// GEOSEM_LISTEN.
  void apply_env(const EnvLookup& lookup);
  void apply_env();

  /// Parameter bounds and presence of the data files. The store snapshot
  /// may be missing (it is created by ingestion).
  void validate() const;

  /// "host:port" split; throws InvalidArgument when malformed.
  std::pair<std::string, int> listen_address() const;
};

ThresholdRounding parse_rounding(std::string_view s);
const char* rounding_name(ThresholdRounding r);

/// Everything a loaded deployment needs, wired together.
struct Runtime {
  std::shared_ptr<const Ontology> ontology;
  std::shared_ptr<const Lexicon> lexicon;
  std::shared_ptr<const GeoResolver> geo;
  std::shared_ptr<ItemStore> store;
  std::shared_ptr<const Interpreter> interpreter;
  std::shared_ptr<const SearchEngine> engine;
};

/// Loads every data file named by the config. A missing store snapshot gives
/// an empty store.
Runtime load_runtime(const Config& config);

}  // namespace geosem
