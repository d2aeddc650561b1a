#include "geosem/eval_harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>

#include "geosem/text.hpp"
#include "json.hpp"

namespace geosem {

namespace {

using nlohmann::json;

std::set<std::string> string_set(const json& rec, const char* key) {
  std::set<std::string> out;
  if (!rec.contains(key) || rec[key].is_null()) return out;
  for (const auto& v : rec.at(key)) out.insert(v.get<std::string>());
  return out;
}

BoundingBox viewport_of(const json& v) {
  if (v.is_string()) return parse_bbox(v.get<std::string>());
  if (!v.is_array() || v.size() != 4) {
    throw std::invalid_argument("viewport must be [min_lon, min_lat, max_lon, max_lat]");
  }
  return BoundingBox::make(v[0].get<double>(), v[1].get<double>(),
                           v[2].get<double>(), v[3].get<double>());
}

AnnotatedQuery parse_record(const json& rec) {
  if (!rec.is_object()) throw std::invalid_argument("record is not an object");
  AnnotatedQuery q;
  if (!rec.contains("text") || !rec["text"].is_string()) {
    throw std::invalid_argument("missing string field 'text'");
  }
  q.text = rec["text"].get<std::string>();
  q.gold_concepts = string_set(rec, "concepts");
  q.gold_items = string_set(rec, "items");
  if (rec.contains("qualifiers") && !rec["qualifiers"].is_null()) {
    for (const auto& qual : rec.at("qualifiers")) {
      q.gold_qualifiers.push_back(qual.get<std::vector<std::string>>());
    }
  }
  if (rec.contains("viewport") && !rec["viewport"].is_null()) {
    q.viewport = viewport_of(rec["viewport"]);
  }
  if (rec.contains("selected") && !rec["selected"].is_null()) {
    q.selected = string_set(rec, "selected");
  }
  return q;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

json aggregate_json(const Aggregate& a) {
  return json{{"count", a.count},
              {"precision", a.mean_precision},
              {"recall", a.mean_recall},
              {"f1", a.mean_f1},
              {"f1_of_means", a.f1_of_means},
              {"stddev_precision", a.stddev_precision},
              {"stddev_recall", a.stddev_recall}};
}

}  // namespace

std::vector<AnnotatedQuery> load_log(std::istream& in, const Ontology& ontology,
                                     const std::string& source) {
  std::vector<AnnotatedQuery> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    AnnotatedQuery q;
    try {
      q = parse_record(json::parse(body));
    } catch (const json::exception& e) {
      throw ParseError(source, lineno, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, lineno, e.what());
    } catch (const Error& e) {
      throw ParseError(source, lineno, e.what());
    }
    q.line = lineno;
    for (const auto& c : q.gold_concepts) {
      if (!ontology.contains(c)) q.flags.push_back("unknown concept '" + c + "'");
    }
    if (q.selected) {
      for (const auto& c : *q.selected) {
        if (!ontology.contains(c)) {
          q.flags.push_back("unknown selected concept '" + c + "'");
        }
      }
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<AnnotatedQuery> load_log_file(const std::filesystem::path& path,
                                          const Ontology& ontology) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open query log " + path.string());
  return load_log(in, ontology, path.string());
}

QueryMetrics score(const std::set<std::string>& returned,
                   const std::set<std::string>& gold) {
  std::size_t hits = 0;
  for (const auto& id : returned) hits += gold.contains(id) ? 1 : 0;
  QueryMetrics m;
  if (returned.empty()) {
    m.precision = gold.empty() ? 1.0 : 0.0;
  } else {
    m.precision = static_cast<double>(hits) / static_cast<double>(returned.size());
  }
  m.recall = gold.empty() ? 1.0
                          : static_cast<double>(hits) / static_cast<double>(gold.size());
  const double sum = m.precision + m.recall;
  m.f1 = sum == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / sum;
  return m;
}

Aggregate aggregate(std::span<const QueryMetrics> values) {
  Aggregate a;
  a.count = values.size();
  if (values.empty()) return a;
  const double n = static_cast<double>(values.size());
  for (const auto& v : values) {
    a.mean_precision += v.precision;
    a.mean_recall += v.recall;
    a.mean_f1 += v.f1;
  }
  a.mean_precision /= n;
  a.mean_recall /= n;
  a.mean_f1 /= n;
  double vp = 0, vr = 0;
  for (const auto& v : values) {
    vp += (v.precision - a.mean_precision) * (v.precision - a.mean_precision);
    vr += (v.recall - a.mean_recall) * (v.recall - a.mean_recall);
  }
  a.stddev_precision = std::sqrt(vp / n);
  a.stddev_recall = std::sqrt(vr / n);
  const double s = a.mean_precision + a.mean_recall;
  a.f1_of_means = s == 0.0 ? 0.0 : 2.0 * a.mean_precision * a.mean_recall / s;
  return a;
}

EvalReport evaluate(std::span<const AnnotatedQuery> log, const SearchEngine& engine) {
  EvalReport report;
  const auto store_ids = engine.store().ids();
  const std::set<std::string> known(store_ids.begin(), store_ids.end());

  for (const auto& q : log) {
    auto exclude = [&](std::string reason) {
      report.excluded.push_back({q.line, q.text, std::move(reason)});
    };
    if (q.flagged()) {
      exclude(text::join(q.flags, "; "));
      continue;
    }
    std::string missing;
    for (const auto& id : q.gold_items) {
      if (!known.contains(id)) {
        missing = id;
        break;
      }
    }
    if (!missing.empty()) {
      exclude("gold item '" + missing + "' is not in the store");
      continue;
    }

    SearchResult result;
    try {
      result = engine.search(q.text, q.viewport, std::nullopt);
      if (std::holds_alternative<Disambiguation>(result.outcome)) {
        if (!q.selected) {
          exclude("query needs disambiguation and the record has no 'selected'");
          continue;
        }
        result = engine.search(q.text, q.viewport, q.selected);
      }
    } catch (const Error& e) {
      exclude(e.what());
      continue;
    }

    std::set<std::string> returned;
    for (const auto& item : result.items) returned.insert(item.id);
    QueryEvaluation ev;
    ev.line = q.line;
    ev.text = q.text;
    ev.concept_key = text::join({q.gold_concepts.begin(), q.gold_concepts.end()}, "+");
    ev.has_qualifiers = !q.gold_qualifiers.empty();
    ev.outcome = std::holds_alternative<Results>(result.outcome) ? "results" : "no_match";
    ev.returned = returned.size();
    ev.gold = q.gold_items.size();
    for (const auto& id : returned) ev.hits += q.gold_items.contains(id) ? 1 : 0;
    ev.metrics = score(returned, q.gold_items);
    report.per_query.push_back(std::move(ev));
  }

  std::vector<QueryMetrics> all, plain, qualified;
  std::map<std::string, std::vector<QueryMetrics>> per_concept;
  for (const auto& ev : report.per_query) {
    all.push_back(ev.metrics);
    (ev.has_qualifiers ? qualified : plain).push_back(ev.metrics);
    per_concept[ev.concept_key].push_back(ev.metrics);
  }
  report.overall = aggregate(all);
  for (const auto& [key, values] : per_concept) report.by_concept[key] = aggregate(values);
  if (!plain.empty()) report.by_type.emplace_back(kOnlyConceptsRow, aggregate(plain));
  if (!qualified.empty()) {
    report.by_type.emplace_back(kConceptsQualifiersRow, aggregate(qualified));
  }
  if (!all.empty()) report.by_type.emplace_back(kAllQueriesRow, report.overall);
  return report;
}

std::string EvalReport::to_table() const {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %9s %9s %7s %7s %9s %12s %12s\n",
                "Type of queries", "Queries", "Precision", "Recall", "F1",
                "F1(P,R)", "Std.dev. P", "Std.dev. R");
  out += line;
  for (const auto& [name, a] : by_type) {
    std::snprintf(line, sizeof line, "%-24s %9zu %9s %7s %7s %9s %12s %12s\n",
                  name.c_str(), a.count, fmt(a.mean_precision).c_str(),
                  fmt(a.mean_recall).c_str(), fmt(a.mean_f1).c_str(),
                  fmt(a.f1_of_means).c_str(), fmt(a.stddev_precision).c_str(),
                  fmt(a.stddev_recall).c_str());
    out += line;
  }
  out += '\n';
  std::snprintf(line, sizeof line, "%-32s %9s %9s %7s %7s %9s\n", "Concept",
                "Queries", "Precision", "Recall", "F1", "F1(P,R)");
  out += line;
  // Most queried concepts first.
  std::vector<std::pair<std::string, Aggregate>> rows(by_concept.begin(), by_concept.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second.count > b.second.count;
  });
  for (const auto& [name, a] : rows) {
    std::snprintf(line, sizeof line, "%-32s %9zu %9s %7s %7s %9s\n", name.c_str(),
                  a.count, fmt(a.mean_precision).c_str(), fmt(a.mean_recall).c_str(),
                  fmt(a.mean_f1).c_str(), fmt(a.f1_of_means).c_str());
    out += line;
  }
  if (!excluded.empty()) {
    out += '\n';
    for (const auto& e : excluded) {
      out += "excluded line " + std::to_string(e.line) + " (" + e.text + "): " +
             e.reason + '\n';
    }
  }
  return out;
}

std::string EvalReport::to_json() const {
  json doc;
  json types = json::array();
  for (const auto& [name, a] : by_type) {
    auto row = aggregate_json(a);
    row["type"] = name;
    types.push_back(std::move(row));
  }
  json concepts = json::array();
  for (const auto& [name, a] : by_concept) {
    auto row = aggregate_json(a);
    row["concept"] = name;
    concepts.push_back(std::move(row));
  }
  json queries = json::array();
  for (const auto& q : per_query) {
    queries.push_back({{"line", q.line},
                       {"text", q.text},
                       {"concepts", q.concept_key},
                       {"has_qualifiers", q.has_qualifiers},
                       {"outcome", q.outcome},
                       {"returned", q.returned},
                       {"gold", q.gold},
                       {"hits", q.hits},
                       {"precision", q.metrics.precision},
                       {"recall", q.metrics.recall},
                       {"f1", q.metrics.f1}});
  }
  json excluded_rows = json::array();
  for (const auto& e : excluded) {
    excluded_rows.push_back({{"line", e.line}, {"text", e.text}, {"reason", e.reason}});
  }
  doc["by_type"] = std::move(types);
  doc["by_concept"] = std::move(concepts);
  doc["overall"] = aggregate_json(overall);
  doc["per_query"] = std::move(queries);
  doc["excluded"] = std::move(excluded_rows);
  return doc.dump(2) + "\n";
}

}  // namespace geosem
