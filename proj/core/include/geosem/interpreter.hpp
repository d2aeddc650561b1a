#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geosem/errors.hpp"
#include "geosem/geo_resolver.hpp"
#include "geosem/lexicon.hpp"
#include "geosem/ontology.hpp"
#include "geosem/qualifier_filter.hpp"

namespace geosem {

class EmptyQueryError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Raised when nothing but stop words and the place reference is left.
class NothingToInterpretError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// One retained query word: its lemma plus the lemmas of its synonyms.
struct TermGroup {
  std::string original;
  std::set<std::string> synonyms;
  std::size_t position = 0;

  bool operator==(const TermGroup&) const = default;
};

struct NormalizedQuery {
  std::string raw;
  /// Query text with the place reference removed, words space-joined.
  std::string simplified;
  std::optional<std::string> place;
  std::vector<TermGroup> groups;
  BoundingBox bbox;

  /// Originals and synonyms, group by group, originals first.
  std::vector<std::string> lemmas() const;
  bool operator==(const NormalizedQuery&) const = default;
};

struct DisambiguationCandidate {
  std::string concept_id;
  std::string label;
  std::string matched_keyword;
  std::size_t match_count = 0;

  bool operator==(const DisambiguationCandidate&) const = default;
};

struct Results {
  ConceptIds concepts;
  QualifierSet qualifier_set;
  BoundingBox bbox;
  NormalizedQuery normalized;
};

struct Disambiguation {
  std::vector<DisambiguationCandidate> candidates;
  NormalizedQuery normalized;
};

struct NoMatch {
  NormalizedQuery normalized;
};

using InterpretationOutcome = std::variant<Results, Disambiguation, NoMatch>;

struct InterpreterOptions {
  /// Search area when the query names no place and no viewport is given.
  BoundingBox default_bbox = BoundingBox::world();
  /// Longest run of adjacent lemmas tried as a multi-word concept name.
  std::size_t max_tuple = 3;
};

/// Turns free text into concepts, a qualifier set and a search box.
///
/// Stateless after construction; calls may run concurrently.
class Interpreter {
 public:
  /// `synonyms` defaults to the lexicon's own synonym groups.
  Interpreter(std::shared_ptr<const Ontology> ontology,
              std::shared_ptr<const Lexicon> lexicon,
              std::shared_ptr<const GeoResolver> geo, InterpreterOptions options = {},
              std::shared_ptr<const SynonymProvider> synonyms = nullptr);

  /// Tokenizes and lowercases, strips the place reference, drops stop words,
  /// lemmatizes the rest and attaches synonyms. The viewport, when present,
  /// wins over a place named in the text.
  NormalizedQuery preprocess(std::string_view query,
                             const std::optional<BoundingBox>& viewport) const;

  /// Direct matches (single lemmas, synonyms and adjacent tuples of original
  /// lemmas) give Results; without any, keyword matches give Disambiguation;
  /// otherwise NoMatch.
  InterpretationOutcome identify_concepts(const NormalizedQuery& nq) const;

  /// preprocess + identify_concepts. With `selected` the concepts are taken
  /// as given and only the qualifier set is computed.
  InterpretationOutcome interpret(std::string_view query,
                                  const std::optional<BoundingBox>& viewport,
                                  const std::optional<ConceptIds>& selected) const;

  const Ontology& ontology() const { return *ontology_; }
  const Lexicon& lexicon() const { return *lexicon_; }
  const GeoResolver& geo() const { return *geo_; }
  const InterpreterOptions& options() const { return options_; }

 private:
  struct DirectHit {
    ConceptIds concepts;
    std::set<std::size_t> groups;  // indexes into NormalizedQuery::groups
  };

  std::vector<DirectHit> direct_hits(const NormalizedQuery& nq) const;
  QualifierSet build_qualifiers(const NormalizedQuery& nq,
                                const std::set<std::size_t>& consumed) const;

  std::shared_ptr<const Ontology> ontology_;
  std::shared_ptr<const Lexicon> lexicon_;
  std::shared_ptr<const GeoResolver> geo_;
  InterpreterOptions options_;
  std::shared_ptr<const SynonymProvider> synonyms_;
};

}  // namespace geosem
