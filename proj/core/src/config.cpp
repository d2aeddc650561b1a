#include "geosem/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "geosem/text.hpp"
#include "json.hpp"

namespace geosem {

namespace {

using nlohmann::json;

double to_double(std::string_view s, const char* what) {
  s = text::trim(s);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument(std::string(what) + ": '" + std::string(s) +
                          "' is not a number");
  }
  return v;
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative() && !base.empty()) return base / path;
  return path;
}

std::vector<std::string> comma_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    auto part = text::trim(s.substr(start, comma == std::string_view::npos
                                               ? comma
                                               : comma - start));
    if (!part.empty()) out.emplace_back(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

ThresholdRounding parse_rounding(std::string_view s) {
  if (s == "ceil") return ThresholdRounding::kCeil;
  if (s == "exact") return ThresholdRounding::kExact;
  throw InvalidArgument("threshold rounding must be 'ceil' or 'exact', got '" +
                        std::string(s) + "'");
}

const char* rounding_name(ThresholdRounding r) {
  return r == ThresholdRounding::kCeil ? "ceil" : "exact";
}

Config Config::from_json(std::string_view json_text,
                         const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError("config", 0, e.what());
  }
  if (!doc.is_object()) throw ParseError("config", 0, "config must be an object");
  Config c;
  try {
    auto path_field = [&](const char* key, std::filesystem::path& out) {
      if (doc.contains(key)) out = resolve(base_dir, doc[key].get<std::string>());
    };
    path_field("ontology", c.ontology);
    path_field("lemmas", c.lemmas);
    path_field("stopwords", c.stopwords);
    path_field("synonyms", c.synonyms);
    path_field("gazetteer", c.gazetteer);
    path_field("store", c.store);
    if (doc.contains("prepositions")) {
      c.prepositions = doc["prepositions"].get<std::vector<std::string>>();
    }
    if (doc.contains("beta")) c.similarity.beta = doc["beta"].get<double>();
    if (doc.contains("gamma")) c.similarity.gamma = doc["gamma"].get<double>();
    if (doc.contains("threshold_rounding")) {
      c.similarity.rounding = parse_rounding(doc["threshold_rounding"].get<std::string>());
    }
    if (doc.contains("related_radius")) {
      c.related_radius = doc["related_radius"].get<double>();
    }
    if (doc.contains("default_bbox")) {
      const auto& b = doc["default_bbox"];
      c.default_bbox = b.is_string()
                           ? parse_bbox(b.get<std::string>())
                           : BoundingBox::make(b.at(0).get<double>(), b.at(1).get<double>(),
                                               b.at(2).get<double>(), b.at(3).get<double>());
    }
    if (doc.contains("listen")) c.listen = doc["listen"].get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError("config", 0, e.what());
  }
  return c;
}

Config Config::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return from_json(ss.str(), path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(path.string(), 0, e.what());
  }
}

void Config::apply_env(const EnvLookup& lookup) {
  auto get = [&](const char* name) -> std::optional<std::string> {
    const char* v = lookup(name);
    if (!v || !*v) return std::nullopt;
    return std::string(v);
  };
  if (auto v = get("GEOSEM_ONTOLOGY")) ontology = *v;
  if (auto v = get("GEOSEM_LEMMAS")) lemmas = *v;
  if (auto v = get("GEOSEM_STOPWORDS")) stopwords = *v;
  if (auto v = get("GEOSEM_SYNONYMS")) synonyms = *v;
  if (auto v = get("GEOSEM_GAZETTEER")) gazetteer = *v;
  if (auto v = get("GEOSEM_STORE")) store = *v;
  if (auto v = get("GEOSEM_PREPOSITIONS")) prepositions = comma_list(*v);
  if (auto v = get("GEOSEM_BETA")) similarity.beta = to_double(*v, "GEOSEM_BETA");
  if (auto v = get("GEOSEM_GAMMA")) similarity.gamma = to_double(*v, "GEOSEM_GAMMA");
  if (auto v = get("GEOSEM_ROUNDING")) similarity.rounding = parse_rounding(*v);
  if (auto v = get("GEOSEM_RADIUS")) related_radius = to_double(*v, "GEOSEM_RADIUS");
  if (auto v = get("GEOSEM_BBOX")) default_bbox = parse_bbox(*v);
  if (auto v = get("GEOSEM_LISTEN")) listen = *v;
}

void Config::apply_env() {
  apply_env([](const char* name) { return std::getenv(name); });
}

void Config::validate() const {
  similarity.validate();
  if (!(related_radius >= 0.0)) throw InvalidArgument("related_radius must be >= 0");
  if (!default_bbox.valid()) throw InvalidArgument("invalid default_bbox");
  const std::pair<const char*, const std::filesystem::path*> required[] = {
      {"ontology", &ontology}, {"lemmas", &lemmas},       {"stopwords", &stopwords},
      {"synonyms", &synonyms}, {"gazetteer", &gazetteer},
  };
  for (const auto& [name, path] : required) {
    if (path->empty()) throw InvalidArgument(std::string("config: '") + name + "' is not set");
    if (!std::filesystem::exists(*path)) {
      throw NotFoundError(std::string("config: ") + name + " file " + path->string() +
                          " does not exist");
    }
  }
  listen_address();
}

std::pair<std::string, int> Config::listen_address() const {
  auto colon = listen.rfind(':');
  if (colon == std::string::npos || colon == 0) {
    throw InvalidArgument("listen address must be host:port, got '" + listen + "'");
  }
  int port = -1;
  const auto ps = std::string_view(listen).substr(colon + 1);
  auto [ptr, ec] = std::from_chars(ps.data(), ps.data() + ps.size(), port);
  if (ec != std::errc() || ptr != ps.data() + ps.size() || port < 0 || port > 65535) {
    throw InvalidArgument("invalid port in listen address '" + listen + "'");
  }
  return {listen.substr(0, colon), port};
}

Runtime load_runtime(const Config& config) {
  config.validate();
  Runtime rt;
  rt.ontology = std::make_shared<const Ontology>(Ontology::load_file(config.ontology));
  rt.lexicon = std::make_shared<const Lexicon>(
      Lexicon::load_files(config.lemmas, config.stopwords, config.synonyms));
  rt.geo = std::make_shared<const GeoResolver>(Gazetteer::load_file(config.gazetteer),
                                               config.prepositions);
  rt.store = std::make_shared<ItemStore>(rt.ontology);
  if (!config.store.empty() && std::filesystem::exists(config.store)) {
    rt.store->restore_file(config.store);
  }
  rt.interpreter = std::make_shared<const Interpreter>(
      rt.ontology, rt.lexicon, rt.geo, InterpreterOptions{config.default_bbox, 3});
  rt.engine = std::make_shared<const SearchEngine>(
      rt.interpreter, rt.store, SearchSettings{config.similarity, config.related_radius});
  return rt;
}

}  // namespace geosem
