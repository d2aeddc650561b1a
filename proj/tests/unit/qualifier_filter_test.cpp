#include <gtest/gtest.h>

#include "fixture.hpp"
#include "geosem/qualifier_filter.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace geosem;

namespace {

QualifierSet qs(std::vector<std::vector<std::string>> terms) {
  QualifierSet q;
  for (auto& t : terms) q.qualifiers.push_back({std::move(t), Qualifier::Source::kOriginal});
  return q;
}

std::vector<GeoItem> torino_hospitals() {
  static const auto rt = fixture::load_it();
  return rt.store->instances_in_bbox({"Ospedale"}, rt.geo->resolve("torino"));
}

std::set<std::string> names(const std::vector<GeoItem>& items) {
  std::set<std::string> out;
  for (const auto& i : items) out.insert(i.properties.at("name"));
  return out;
}

}  // namespace

TEST(Levenshtein, Examples) {
  EXPECT_EQ(levenshtein("ospedale", "ospedali"), 1u);
  EXPECT_EQ(levenshtein("primaria", "paritaria"), 2u);
  EXPECT_EQ(levenshtein("", "abc"), 3u);
  EXPECT_EQ(levenshtein("abc", ""), 3u);
  EXPECT_EQ(levenshtein("torino", "torino"), 0u);
  EXPECT_EQ(levenshtein("città", "citta"), 1u);  // one code point, two bytes
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
}

TEST(Levenshtein, MetricAxioms) {
  props::Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    const auto a = props::random_word(rng, 0, 10);
    const auto b = props::random_word(rng, 0, 10);
    const auto c = props::random_word(rng, 0, 10);
    const auto ab = levenshtein(a, b);
    ASSERT_EQ(ab, levenshtein(b, a));
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_LE(levenshtein(a, c), ab + levenshtein(b, c));
  }
}

TEST(Levenshtein, MatchesTextbookReference) {
  const auto r = props::levenshtein_equivalence(10000, 1234);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
  EXPECT_EQ(r.cases, 10000u);
}

TEST(SimilarityParams, Validation) {
  EXPECT_NO_THROW((SimilarityParams{0.5, 0.2}.validate()));
  EXPECT_NO_THROW((SimilarityParams{1.0, 1.0}.validate()));
  EXPECT_THROW((SimilarityParams{0.0, 0.2}.validate()), InvalidArgument);
  EXPECT_THROW((SimilarityParams{0.5, 0.0}.validate()), InvalidArgument);
  EXPECT_THROW((SimilarityParams{1.5, 0.2}.validate()), InvalidArgument);
  EXPECT_THROW((SimilarityParams{0.5, 1.01}.validate()), InvalidArgument);
}

TEST(SimilarityParams, DistanceBudget) {
  SimilarityParams p;
  EXPECT_DOUBLE_EQ(term_distance_budget(8, 9, p), 2.0);  // ceil(1.8)
  EXPECT_DOUBLE_EQ(term_distance_budget(5, 3, p), 1.0);  // 0.2 * 5 is exactly 1
  p.gamma = 0.15;
  EXPECT_DOUBLE_EQ(term_distance_budget(8, 9, p), 2.0);  // ceil(1.35)
  p.rounding = ThresholdRounding::kExact;
  EXPECT_NEAR(term_distance_budget(8, 9, p), 1.35, 1e-12);
}

TEST(PropertySimilar, Examples) {
  const SimilarityParams p;
  EXPECT_TRUE(property_similar("Ospedale Infantile Regina Margherita",
                               qs({{"pediatrico"}, {"infantile"}}), p));
  EXPECT_TRUE(property_similar("AOU San Giovanni Battista", qs({{"san", "giovanni", "bosco"}}), p));
  EXPECT_TRUE(property_similar("Scuola paritaria", qs({{"primaria"}}), p));
  EXPECT_FALSE(property_similar("Liceo Classico", qs({{"pediatrico"}, {"infantile"}}), p));
}

TEST(PropertySimilar, StrictThreshold) {
  // One similar pair against lm = 0.5 * min(1, 1) passes; against
  // lm = 0.5 * min(2, 2) = 1 it does not.
  const SimilarityParams p;
  EXPECT_TRUE(property_similar("ospedale", qs({{"ospedali"}}), p));
  EXPECT_FALSE(property_similar("ospedale civile", qs({{"ospedali", "zzzzzz"}}), p));
  EXPECT_TRUE(property_similar("ospedale civile", qs({{"ospedali", "civili"}}), p));
}

TEST(PropertySimilar, CountsRestartForEachQualifier) {
  // "san" matches in both qualifiers; accumulated it would reach 2 > 1.5.
  const SimilarityParams p;
  EXPECT_FALSE(property_similar("Ospedale San Vito",
                                qs({{"san", "xxxx", "yyyy"}, {"san", "wwww", "kkkk"}}), p));
}

TEST(PropertySimilar, ExactRoundingDropsDistanceTwoAtGammaPointTwo) {
  SimilarityParams p;
  p.rounding = ThresholdRounding::kExact;
  EXPECT_FALSE(property_similar("Scuola paritaria", qs({{"primaria"}}), p));
  EXPECT_TRUE(property_similar("Scuola primaria", qs({{"primaria"}}), p));
}

TEST(PropertySimilar, CaseAndPunctuationInsensitive) {
  const SimilarityParams p;
  EXPECT_TRUE(property_similar("MUSEO EGIZIO!", qs({{"egizio"}}), p));
  EXPECT_TRUE(property_similar("(egizio)", qs({{"Egizio"}}), p));
}

TEST(PropertySimilar, EmptyQualifierSetIsRejected) {
  EXPECT_THROW(property_similar("x", QualifierSet{}, SimilarityParams{}), InvalidArgument);
}

TEST(PropertySimilar, MatchesLiteralReference) {
  const auto r = props::similarity_equivalence(10000, 99);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(FilterItems, PediatricHospitalsInTorino) {
  const auto kept = filter_items(torino_hospitals(), qs({{"pediatrico"}, {"infantile"}}), {});
  EXPECT_EQ(names(kept), std::set<std::string>{"Ospedale Infantile Regina Margherita"});
}

TEST(FilterItems, CompanyPropertyRetainsMolinette) {
  const auto kept =
      filter_items(torino_hospitals(), qs({{"ospedale", "giovanni", "battista"}}), {});
  EXPECT_TRUE(names(kept).contains("Presidio Ospedaliero Molinette"));
}

TEST(FilterItems, EmptyQualifierSetKeepsEverything) {
  const auto all = torino_hospitals();
  EXPECT_EQ(filter_items(all, QualifierSet{}, {}), all);
}

TEST(FilterItems, PreservesOrder) {
  auto all = torino_hospitals();
  std::reverse(all.begin(), all.end());
  const auto kept = filter_items(all, qs({{"ospedale"}}), {});
  EXPECT_TRUE(props::is_ordered_subset(props::ids_of(kept), props::ids_of(all)));
}

TEST(FilterItems, LargeInputsAgreeWithReference) {
  // Enough items to take the partitioned path.
  props::Rng rng(5);
  std::vector<GeoItem> items;
  std::vector<std::string> vocab;
  for (int i = 0; i < 30; ++i) vocab.push_back(props::random_word(rng, 3, 9));
  for (int i = 0; i < 6000; ++i) {
    GeoItem item;
    item.id = "i" + std::to_string(i);
    item.concept_id = "C";
    item.geometry = Point{{7, 45}};
    item.bbox = bbox_of(item.geometry);
    item.properties["name"] = props::mutate(rng, props::choose(rng, vocab)) + " " +
                              props::choose(rng, vocab);
    items.push_back(std::move(item));
  }
  const std::vector<std::vector<std::string>> Q = {{vocab[0]}, {vocab[1], vocab[2]}};
  const auto kept = filter_items(items, qs(Q), {});
  std::vector<std::string> expected;
  for (const auto& it : items) {
    if (oracle::property_similar(it.properties.at("name"), Q, 50, 200, true)) {
      expected.push_back(it.id);
    }
  }
  EXPECT_EQ(props::ids_of(kept), expected);
  EXPECT_GT(expected.size(), 0u);
}

TEST(FilterItems, IdempotentAndSubset) {
  const auto r = props::filter_idempotence(1000, 21);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(FilterItems, MonotoneInGamma) {
  const auto r = props::gamma_monotonicity(1000, 22);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}
