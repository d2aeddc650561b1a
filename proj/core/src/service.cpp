#include "geosem/service.hpp"

#include "geojson.hpp"
#include "json.hpp"

namespace geosem {

namespace {

using nlohmann::json;

HttpResponse json_response(int status, const json& body) {
  return {status, body.dump(), "application/json"};
}

HttpResponse error_response(int status, const std::string& message) {
  return json_response(status, json{{"status", "error"}, {"message", message}});
}

json qualifier_json(const QualifierSet& q) {
  json out = json::array();
  for (const auto& qual : q.qualifiers) out.push_back(qual.terms);
  return out;
}

json related_summary(const RelatedItem& r) {
  json row{{"relation", r.relation}, {"id", r.item.id}, {"concept", r.item.concept_id}};
  if (auto it = r.item.properties.find("name"); it != r.item.properties.end()) {
    row["name"] = it->second;
  }
  return row;
}

}  // namespace

QueryRequest parse_query_request(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::exception&) {
    throw InvalidArgument("request body is not valid JSON");
  }
  if (!doc.is_object()) throw InvalidArgument("request body must be an object");
  QueryRequest req;
  if (!doc.contains("text") || !doc["text"].is_string()) {
    throw InvalidArgument("'text' must be a string");
  }
  req.text = doc["text"].get<std::string>();
  if (auto it = doc.find("bbox"); it != doc.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 4) {
      throw InvalidArgument("'bbox' must be [min_lon, min_lat, max_lon, max_lat]");
    }
    for (const auto& v : *it) {
      if (!v.is_number()) throw InvalidArgument("'bbox' entries must be numbers");
    }
    try {
      req.bbox = BoundingBox::make((*it)[0].get<double>(), (*it)[1].get<double>(),
                                   (*it)[2].get<double>(), (*it)[3].get<double>());
    } catch (const DataError& e) {
      throw InvalidArgument(e.what());
    }
  }
  if (auto it = doc.find("selected_concepts"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw InvalidArgument("'selected_concepts' must be a list");
    std::vector<std::string> ids;
    for (const auto& v : *it) {
      if (!v.is_string()) throw InvalidArgument("'selected_concepts' must hold strings");
      ids.push_back(v.get<std::string>());
    }
    req.selected_concepts = std::move(ids);
  }
  return req;
}

Service::Service(std::shared_ptr<const SearchEngine> engine) : engine_(std::move(engine)) {
  if (!engine_) throw InvalidArgument("service needs a search engine");
}

std::shared_ptr<const SearchEngine> Service::engine() const {
  std::lock_guard lock(mutex_);
  return engine_;
}

void Service::replace_engine(std::shared_ptr<const SearchEngine> engine) {
  if (!engine) throw InvalidArgument("service needs a search engine");
  std::lock_guard lock(mutex_);
  engine_ = std::move(engine);
}

HttpResponse Service::handle_query(const QueryRequest& request) const {
  const auto eng = engine();
  try {
    std::optional<ConceptIds> selected;
    if (request.selected_concepts && !request.selected_concepts->empty()) {
      selected.emplace(request.selected_concepts->begin(), request.selected_concepts->end());
    }
    const auto result = eng->search(request.text, request.bbox, selected);
    if (const auto* r = std::get_if<Results>(&result.outcome)) {
      return json_response(
          200, json{{"status", "results"},
                    {"matched_concepts", json(std::vector<std::string>(
                                             r->concepts.begin(), r->concepts.end()))},
                    {"qualifier_set", qualifier_json(r->qualifier_set)},
                    {"features", geojson::to_feature_collection(result.items)}});
    }
    if (const auto* d = std::get_if<Disambiguation>(&result.outcome)) {
      json candidates = json::array();
      for (const auto& c : d->candidates) {
        candidates.push_back({{"id", c.concept_id},
                              {"label", c.label},
                              {"matched_keyword", c.matched_keyword}});
      }
      return json_response(200, json{{"status", "disambiguation"},
                                     {"candidates", std::move(candidates)}});
    }
    return json_response(200, json{{"status", "no_match"}});
  } catch (const InvalidArgument& e) {
    return error_response(400, e.what());
  } catch (const NotFoundError& e) {
    return error_response(400, e.what());
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

HttpResponse Service::handle_query(std::string_view body) const {
  QueryRequest req;
  try {
    req = parse_query_request(body);
  } catch (const InvalidArgument& e) {
    return error_response(400, e.what());
  }
  return handle_query(req);
}

HttpResponse Service::handle_item_detail(std::string_view item_id) const {
  const auto eng = engine();
  try {
    auto item = eng->store().find(item_id);
    if (!item) return error_response(404, "unknown item '" + std::string(item_id) + "'");
    json related = json::array();
    for (const auto& r : eng->store().related_items(item_id, eng->settings().related_radius)) {
      related.push_back(related_summary(r));
    }
    json props = json::object();
    for (const auto& [k, v] : item->properties) props[k] = v;
    return json_response(200, json{{"id", item->id},
                                   {"concept", item->concept_id},
                                   {"properties", std::move(props)},
                                   {"geometry", geojson::to_json(item->geometry)},
                                   {"related", std::move(related)}});
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

HttpResponse Service::handle_related(std::string_view item_id) const {
  const auto eng = engine();
  try {
    if (!eng->store().find(item_id)) {
      return error_response(404, "unknown item '" + std::string(item_id) + "'");
    }
    json related = json::array();
    for (const auto& r : eng->store().related_items(item_id, eng->settings().related_radius)) {
      related.push_back({{"relation", r.relation}, {"feature", geojson::to_feature(r.item)}});
    }
    return json_response(200, json{{"id", std::string(item_id)}, {"related", std::move(related)}});
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

HttpResponse Service::handle_concepts() const {
  const auto eng = engine();
  json out = json::array();
  for (const auto& [id, c] : eng->ontology().concepts()) {
    json rels = json::array();
    for (const auto& r : c.thematic_relations) {
      rels.push_back({{"name", r.name}, {"target", r.target}});
    }
    out.push_back({{"id", id},
                   {"label", c.label},
                   {"parent", c.parent ? json(*c.parent) : json(nullptr)},
                   {"relations", std::move(rels)}});
  }
  return json_response(200, out);
}

HttpResponse Service::handle_health() const {
  const auto eng = engine();
  return json_response(200, json{{"status", "ok"},
                                 {"concepts", eng->ontology().size()},
                                 {"items", eng->store().size()}});
}

}  // namespace geosem
