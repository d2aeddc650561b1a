#include "geosem/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "geosem/text.hpp"
#include "json.hpp"

namespace geosem {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string normalize_lemma(std::string_view s) {
  return text::join(text::split_ws(text::trim(s)), " ");
}

bool valid_lemma(const std::string& s) {
  return !s.empty() && s == text::to_lower(s) && s == normalize_lemma(s);
}

template <typename T>
void push_unique(std::vector<T>& v, T value) {
  if (std::find(v.begin(), v.end(), value) == v.end()) {
    v.push_back(std::move(value));
  }
}

void check_concept(const Concept& c) {
  if (c.id.empty()) throw DataError("concept with empty id");
  if (!valid_lemma(c.lemma)) {
    throw DataError("concept " + c.id + ": lemma '" + c.lemma +
                    "' must be non-empty, lowercase and single-spaced");
  }
  for (const auto& s : c.synonym_lemmas) {
    if (!valid_lemma(s)) {
      throw DataError("concept " + c.id + ": invalid synonym lemma '" + s + "'");
    }
  }
  for (const auto& k : c.keyword_lemmas) {
    if (!valid_lemma(k)) {
      throw DataError("concept " + c.id + ": invalid keyword lemma '" + k + "'");
    }
  }
}

std::vector<std::string> string_list(const nlohmann::json& rec,
                                     const char* key) {
  std::vector<std::string> out;
  auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw std::invalid_argument(std::string("'") + key + "' must be a list");
  }
  for (const auto& v : *it) {
    if (!v.is_string()) {
      throw std::invalid_argument(std::string("'") + key +
                                  "' entries must be strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string required_string(const nlohmann::json& rec, const char* key) {
  auto it = rec.find(key);
  if (it == rec.end() || !it->is_string()) {
    throw std::invalid_argument(std::string("missing string field '") + key +
                                "'");
  }
  return it->get<std::string>();
}

Concept parse_concept(const nlohmann::json& rec) {
  if (!rec.is_object()) throw std::invalid_argument("record is not an object");
  Concept c;
  c.id = required_string(rec, "id");
  c.lemma = required_string(rec, "lemma");
  c.label = rec.contains("label") ? required_string(rec, "label") : c.id;
  for (auto& s : string_list(rec, "synonyms")) {
    push_unique(c.synonym_lemmas, std::move(s));
  }
  if (auto it = rec.find("keywords"); it != rec.end() && !it->is_null()) {
    if (!it->is_array()) throw std::invalid_argument("'keywords' must be a list");
    for (const auto& k : *it) {
      if (k.is_string()) {
        push_unique(c.keyword_lemmas, k.get<std::string>());
      } else if (k.is_object() && k.contains("lemma") && k["lemma"].is_string()) {
        auto lemma = k["lemma"].get<std::string>();
        if (k.contains("weight")) {
          if (!k["weight"].is_number()) {
            throw std::invalid_argument("keyword weight must be a number");
          }
          c.keyword_weights[lemma] = k["weight"].get<double>();
        }
        push_unique(c.keyword_lemmas, std::move(lemma));
      } else {
        throw std::invalid_argument(
            "keyword entries must be strings or {\"lemma\", \"weight\"} objects");
      }
    }
  }
  if (auto it = rec.find("parent"); it != rec.end() && !it->is_null()) {
    if (!it->is_string()) throw std::invalid_argument("'parent' must be a string");
    c.parent = it->get<std::string>();
  }
  for (const auto& r : string_list(rec, "relations")) {
    auto arrow = r.find("->");
    if (arrow == std::string::npos) {
      throw std::invalid_argument("relation '" + r + "' is not 'name -> target'");
    }
    Relation rel{std::string(text::trim(std::string_view(r).substr(0, arrow))),
                 std::string(text::trim(std::string_view(r).substr(arrow + 2)))};
    if (rel.name.empty() || rel.target.empty()) {
      throw std::invalid_argument("relation '" + r + "' has an empty side");
    }
    push_unique(c.thematic_relations, std::move(rel));
  }
  for (auto& p : string_list(rec, "properties")) {
    push_unique(c.property_schema, std::move(p));
  }
  return c;
}

}  // namespace

Ontology Ontology::from_concepts(std::vector<Concept> concepts) {
  Ontology o;
  for (auto& c : concepts) {
    check_concept(c);
    std::string id = c.id;
    if (!o.concepts_.emplace(id, std::move(c)).second) {
      throw DataError("duplicate concept id '" + id + "'");
    }
  }
  for (const auto& [id, c] : o.concepts_) {
    if (c.parent && !o.concepts_.contains(*c.parent)) {
      throw DanglingReferenceError("concept " + id + ": parent '" + *c.parent +
                                   "' does not exist");
    }
    for (const auto& r : c.thematic_relations) {
      if (!o.concepts_.contains(r.target)) {
        throw DanglingReferenceError("concept " + id + ": relation " + r.name +
                                     " targets unknown concept '" + r.target +
                                     "'");
      }
    }
  }
  // Parent chains: any walk longer than the concept count revisits a node.
  for (const auto& [id, c] : o.concepts_) {
    std::vector<std::string> path{id};
    const Concept* cur = &c;
    while (cur->parent) {
      if (std::find(path.begin(), path.end(), *cur->parent) != path.end()) {
        path.push_back(*cur->parent);
        throw CycleError("cycle in concept hierarchy: " + text::join(path, " -> "));
      }
      path.push_back(*cur->parent);
      cur = &o.concepts_.find(*cur->parent)->second;
    }
  }
  for (const auto& [id, c] : o.concepts_) {
    o.lemma_index_[c.lemma].insert(id);
    for (const auto& s : c.synonym_lemmas) o.lemma_index_[s].insert(id);
    for (const auto& k : c.keyword_lemmas) o.keyword_index_[k].insert(id);
  }
  return o;
}

Ontology Ontology::load(std::istream& in, const std::string& source) {
  std::vector<Concept> concepts;
  std::map<std::string, std::size_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    Concept c;
    try {
      c = parse_concept(nlohmann::json::parse(body));
      check_concept(c);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(source, lineno, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, lineno, e.what());
    } catch (const DataError& e) {
      throw ParseError(source, lineno, e.what());
    }
    if (auto [it, fresh] = seen.emplace(c.id, lineno); !fresh) {
      throw ParseError(source, lineno,
                       "duplicate concept id '" + c.id + "' (first on line " +
                           std::to_string(it->second) + ")");
    }
    concepts.push_back(std::move(c));
  }
  return from_concepts(std::move(concepts));
}

Ontology Ontology::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open ontology file " + path.string());
  return load(in, path.string());
}

std::string Ontology::serialize() const {
  std::string out;
  for (const auto& [id, c] : concepts_) {
    ordered_json rec;
    rec["id"] = c.id;
    rec["label"] = c.label;
    rec["lemma"] = c.lemma;
    rec["synonyms"] = c.synonym_lemmas;
    ordered_json kws = ordered_json::array();
    for (const auto& k : c.keyword_lemmas) {
      if (auto w = c.keyword_weights.find(k); w != c.keyword_weights.end()) {
        kws.push_back(ordered_json{{"lemma", k}, {"weight", w->second}});
      } else {
        kws.push_back(k);
      }
    }
    rec["keywords"] = std::move(kws);
    rec["parent"] = c.parent ? ordered_json(*c.parent) : ordered_json(nullptr);
    ordered_json rels = ordered_json::array();
    for (const auto& r : c.thematic_relations) {
      rels.push_back(r.name + " -> " + r.target);
    }
    rec["relations"] = std::move(rels);
    rec["properties"] = c.property_schema;
    out += rec.dump();
    out += '\n';
  }
  return out;
}

bool Ontology::contains(std::string_view id) const {
  return concepts_.find(id) != concepts_.end();
}

const Concept* Ontology::find(std::string_view id) const {
  auto it = concepts_.find(id);
  return it == concepts_.end() ? nullptr : &it->second;
}

const Concept& Ontology::get(std::string_view id) const {
  if (const Concept* c = find(id)) return *c;
  throw NotFoundError("unknown concept '" + std::string(id) + "'");
}

ConceptIds Ontology::direct_matches(std::span<const std::string> seq) const {
  if (seq.empty()) return {};
  std::string key = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) {
    key += ' ';
    key += seq[i];
  }
  auto it = lemma_index_.find(key);
  return it == lemma_index_.end() ? ConceptIds{} : it->second;
}

ConceptIds Ontology::keyword_matches(std::string_view lemma) const {
  auto it = keyword_index_.find(lemma);
  return it == keyword_index_.end() ? ConceptIds{} : it->second;
}

std::vector<std::string> Ontology::ancestors(std::string_view id) const {
  std::vector<std::string> out;
  const Concept* c = &get(id);
  while (c->parent) {
    out.push_back(*c->parent);
    c = &get(*c->parent);
  }
  return out;
}

bool Ontology::is_ancestor(std::string_view ancestor,
                           std::string_view descendant) const {
  for (const auto& a : ancestors(descendant)) {
    if (a == ancestor) return true;
  }
  return false;
}

ConceptIds Ontology::most_specific(const ConceptIds& ids) const {
  ConceptIds covered;
  for (const auto& id : ids) {
    for (auto& a : ancestors(id)) covered.insert(std::move(a));
  }
  ConceptIds out;
  for (const auto& id : ids) {
    if (!covered.contains(id)) out.insert(id);
  }
  return out;
}

std::vector<Relation> Ontology::related_concepts(std::string_view id) const {
  std::set<Relation> acc;
  const Concept* c = &get(id);
  while (true) {
    acc.insert(c->thematic_relations.begin(), c->thematic_relations.end());
    if (!c->parent) break;
    c = &get(*c->parent);
  }
  return {acc.begin(), acc.end()};
}

}  // namespace geosem
