#pragma once

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geosem/errors.hpp"

namespace geosem {

class CycleError : public DataError {
 public:
  using DataError::DataError;
};

class DanglingReferenceError : public DataError {
 public:
  using DataError::DataError;
};

/// Named non-hierarchical link between two concepts, e.g. servedBy -> FermataBus.
struct Relation {
  std::string name;
  std::string target;

  auto operator<=>(const Relation&) const = default;
};

/// One node of the domain ontology together with the lemmas used to match
/// query text against it. Lemma strings may span several words; words are
/// joined by a single space.
struct Concept {
  std::string id;
  std::string label;
  std::string lemma;
  std::vector<std::string> synonym_lemmas;  // declaration order, unique
  std::vector<std::string> keyword_lemmas;  // declaration order, unique
  /// Optional per-keyword weights. Carried through serialization, not used
  /// for matching.
  std::map<std::string, double> keyword_weights;
  std::optional<std::string> parent;
  std::vector<Relation> thematic_relations;  // declaration order, unique
  std::vector<std::string> property_schema;

  bool operator==(const Concept&) const = default;
};

using ConceptIds = std::set<std::string>;

/// Immutable concept hierarchy plus the two lookup tiers used by the
/// interpreter: the direct tier (lemma and synonyms) and the keyword tier
/// (definition keywords).
///
/// The on-disk format is JSON Lines, one concept per line:
///
///   {"id":"Ospedale","label":"Ospedale","lemma":"ospedale",
///    "synonyms":["nosocomio","clinica"],"keywords":["cura",{"lemma":"ferito","weight":0.5}],
///    "parent":"ServiziPubblici","relations":["nearTo -> Scuola"],
///    "properties":["gestore","tipologia"]}
///
/// Blank lines and lines starting with '#' are ignored. `serialize()` emits
/// the canonical form (concepts ordered by id, fixed key order, no comments);
/// loading a canonical document and serializing it reproduces it byte for byte.
class Ontology {
 public:
  Ontology() = default;

  /// Validates the concept set (unique ids, lowercase non-empty lemmas,
  /// acyclic parents, resolvable references) and builds both indexes.
  static Ontology from_concepts(std::vector<Concept> concepts);

  static Ontology load(std::istream& in, const std::string& source = "<ontology>");
  static Ontology load_file(const std::filesystem::path& path);

  std::string serialize() const;

  std::size_t size() const { return concepts_.size(); }
  bool empty() const { return concepts_.empty(); }
  bool contains(std::string_view id) const;
  const Concept* find(std::string_view id) const;
  /// Throws NotFoundError on unknown ids.
  const Concept& get(std::string_view id) const;
  const std::map<std::string, Concept, std::less<>>& concepts() const {
    return concepts_;
  }

  /// Concepts whose lemma or a synonym equals `seq` joined by single spaces.
  ConceptIds direct_matches(std::span<const std::string> seq) const;
  ConceptIds keyword_matches(std::string_view lemma) const;

  /// Drops every member that is a proper ancestor of another member.
  ConceptIds most_specific(const ConceptIds& ids) const;

  /// Own thematic relations plus those inherited from ancestors, ordered by
  /// (relation name, target id).
  std::vector<Relation> related_concepts(std::string_view id) const;

  /// Proper ancestors, nearest first.
  std::vector<std::string> ancestors(std::string_view id) const;
  bool is_ancestor(std::string_view ancestor, std::string_view descendant) const;

  const std::map<std::string, ConceptIds, std::less<>>& lemma_index() const {
    return lemma_index_;
  }
  const std::map<std::string, ConceptIds, std::less<>>& keyword_index() const {
    return keyword_index_;
  }

 private:
  std::map<std::string, Concept, std::less<>> concepts_;
  std::map<std::string, ConceptIds, std::less<>> lemma_index_;
  std::map<std::string, ConceptIds, std::less<>> keyword_index_;
};

}  // namespace geosem
