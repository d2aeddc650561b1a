#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geosem/geo_item.hpp"

namespace geosem {

/// A query fragment that characterizes the wanted items rather than naming a
/// concept, e.g. [pediatrico] or [san, giovanni, bosco].
struct Qualifier {
  enum class Source { kOriginal, kSynonym };

  std::vector<std::string> terms;
  Source source = Source::kOriginal;

  bool operator==(const Qualifier&) const = default;
};

struct QualifierSet {
  std::vector<Qualifier> qualifiers;

  bool empty() const { return qualifiers.empty(); }
  std::size_t size() const { return qualifiers.size(); }
  bool operator==(const QualifierSet&) const = default;
};

/// How the per-pair edit-distance budget gamma * max(len) is turned into an
/// integer. kCeil rounds up; kExact compares the distance with the real
/// product. In both modes a product within 1e-9 of an integer counts as that
/// integer, so 0.2 * 5 is exactly 1.
enum class ThresholdRounding { kCeil, kExact };

struct SimilarityParams {
  double beta = 0.5;
  double gamma = 0.20;
  ThresholdRounding rounding = ThresholdRounding::kCeil;

  /// Throws InvalidArgument unless 0 < beta <= 1 and 0 < gamma <= 1.
  void validate() const;
};

/// Edit distance over Unicode code points.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// Edit-distance budget for a pair of terms with the given code point lengths.
double term_distance_budget(std::size_t len_a, std::size_t len_b,
                            const SimilarityParams& params);

/// True when the property text is similar to at least one qualifier: more
/// than beta * min(|terms(p)|, |terms(q)|) term pairs lie within the
/// edit-distance budget. Property words are lowercased and stripped of
/// punctuation but never lemmatized. Throws InvalidArgument for an empty set.
bool property_similar(std::string_view property, const QualifierSet& qualifiers,
                      const SimilarityParams& params);

/// Qualifier set compiled once for repeated property checks.
class QualifierMatcher {
 public:
  QualifierMatcher(const QualifierSet& qualifiers, const SimilarityParams& params);

  bool property_similar(std::string_view property) const;
  /// True when any property value of the item is similar.
  bool item_similar(const GeoItem& item) const;

 private:
  struct Term {
    std::u32string chars;
  };
  std::vector<std::vector<Term>> qualifiers_;
  SimilarityParams params_;
};

/// Keeps the items with at least one property similar to the qualifier set,
/// preserving order. An empty set keeps everything. Large inputs are split
/// across worker threads.
std::vector<GeoItem> filter_items(std::vector<GeoItem> items,
                                  const QualifierSet& qualifiers,
                                  const SimilarityParams& params);

}  // namespace geosem
