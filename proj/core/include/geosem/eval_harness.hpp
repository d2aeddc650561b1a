#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "geosem/engine.hpp"

namespace geosem {

/// One line of an annotated query log.
///
/// Log format: JSON Lines, blank and '#' lines ignored.
///   {"text": "nosocomi pediatrici a Torino",
///    "concepts": ["Ospedale"], "qualifiers": [["pediatrico"]],
///    "items": ["osp-regina-margherita"],
///    "viewport": [7.57, 45.0, 7.78, 45.14],      optional
///    "selected": ["ParcoUrbano"]}               optional, used on Disambiguation
struct AnnotatedQuery {
  std::size_t line = 0;
  std::string text;
  ConceptIds gold_concepts;
  std::vector<std::vector<std::string>> gold_qualifiers;
  std::set<std::string> gold_items;
  std::optional<BoundingBox> viewport;
  std::optional<ConceptIds> selected;
  /// Reasons the record cannot be scored; flagged records are left out of
  /// every aggregate.
  std::vector<std::string> flags;

  bool flagged() const { return !flags.empty(); }
};

/// Throws ParseError (with line number) on malformed lines. Records naming
/// concepts missing from the ontology are kept but flagged.
std::vector<AnnotatedQuery> load_log(std::istream& in, const Ontology& ontology,
                                     const std::string& source = "<log>");
std::vector<AnnotatedQuery> load_log_file(const std::filesystem::path& path,
                                          const Ontology& ontology);

struct QueryMetrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

/// Set-based precision and recall. Both empty: P = R = 1. Gold empty and
/// returned non-empty: P = 0, R = 1. Returned empty and gold non-empty:
/// P = R = 0. F1 is 0 when P + R = 0.
QueryMetrics score(const std::set<std::string>& returned,
                   const std::set<std::string>& gold);

struct Aggregate {
  std::size_t count = 0;
  double mean_precision = 0;
  double mean_recall = 0;
  /// Mean of the per-query F1 values.
  double mean_f1 = 0;
  /// Population standard deviations.
  double stddev_precision = 0;
  double stddev_recall = 0;
  /// Harmonic mean of mean_precision and mean_recall.
  double f1_of_means = 0;
};

Aggregate aggregate(std::span<const QueryMetrics> values);

struct QueryEvaluation {
  std::size_t line = 0;
  std::string text;
  /// Gold concepts joined with '+', the by-concept grouping key.
  std::string concept_key;
  bool has_qualifiers = false;
  std::string outcome;  // results | no_match
  std::size_t returned = 0;
  std::size_t gold = 0;
  std::size_t hits = 0;
  QueryMetrics metrics;
};

struct ExcludedQuery {
  std::size_t line = 0;
  std::string text;
  std::string reason;
};

inline constexpr const char* kOnlyConceptsRow = "Only concepts";
inline constexpr const char* kConceptsQualifiersRow = "Concepts + Qualifiers";
inline constexpr const char* kAllQueriesRow = "All queries";

struct EvalReport {
  std::vector<QueryEvaluation> per_query;
  std::vector<ExcludedQuery> excluded;
  Aggregate overall;
  std::map<std::string, Aggregate> by_concept;
  /// "Only concepts", "Concepts + Qualifiers", "All queries"; rows with no
  /// queries are omitted.
  std::vector<std::pair<std::string, Aggregate>> by_type;

  std::string to_table() const;
  std::string to_json() const;
};

/// Replays every unflagged record through the engine. A record whose query
/// needs disambiguation is rerun with its scripted `selected` concepts, or
/// excluded when it has none.
EvalReport evaluate(std::span<const AnnotatedQuery> log, const SearchEngine& engine);

}  // namespace geosem
