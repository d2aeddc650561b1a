#include <gtest/gtest.h>

#include <sstream>

#include "fixture.hpp"
#include "geosem/lexicon.hpp"

using namespace geosem;

namespace {

const Lexicon& it_lexicon() {
  static const Lexicon lex = Lexicon::load_files(fixture::dir("it") / "lemmas.tsv",
                                                 fixture::dir("it") / "stopwords.txt",
                                                 fixture::dir("it") / "synonyms.txt");
  return lex;
}

}  // namespace

TEST(Lexicon, Lemmatize) {
  const auto& lex = it_lexicon();
  EXPECT_EQ(lex.lemmatize("ospedali"), "ospedale");
  EXPECT_EQ(lex.lemmatize("nosocomi"), "nosocomio");
  EXPECT_EQ(lex.lemmatize("Ospedali"), "ospedale");
  EXPECT_EQ(lex.lemmatize("qwerty"), "qwerty");
  EXPECT_THROW(lex.lemmatize(""), InvalidArgument);
}

TEST(Lexicon, LemmatizeIsIdempotent) {
  const auto& lex = it_lexicon();
  for (const auto& [surface, lemma] : lex.lemma_table()) {
    EXPECT_EQ(lex.lemmatize(lex.lemmatize(surface)), lex.lemmatize(surface));
  }
}

TEST(Lexicon, Stopwords) {
  const auto& lex = it_lexicon();
  EXPECT_TRUE(lex.is_stopword("a"));
  EXPECT_FALSE(lex.is_stopword("ospedale"));
  EXPECT_EQ(lex.is_stopword("E"), lex.is_stopword("e"));
}

TEST(Lexicon, Synonyms) {
  const auto& lex = it_lexicon();
  EXPECT_EQ(lex.synonyms("nosocomio", "nosocomi pediatrici"), std::set<std::string>{"ospedale"});
  EXPECT_EQ(lex.synonyms("pediatrico", ""), std::set<std::string>{"infantile"});
  EXPECT_TRUE(lex.synonyms("qwerty", "").empty());
  EXPECT_TRUE(lex.synonyms("primaria", "").empty());
}

TEST(Lexicon, SynonymyIsSymmetricAndExcludesSelf) {
  const auto& lex = it_lexicon();
  for (const auto& group : lex.synonym_groups()) {
    for (const auto& a : group) {
      const auto sa = lex.synonyms(a, "");
      EXPECT_FALSE(sa.contains(a));
      for (const auto& b : sa) EXPECT_TRUE(lex.synonyms(b, "").contains(a)) << a << " " << b;
    }
  }
}

TEST(Lexicon, RejectsLemmaThatIsNotAFixedPoint) {
  EXPECT_THROW(Lexicon({{"ospedali", "ospedale"}, {"ospedale", "struttura"}}, {}, {}),
               DataError);
  EXPECT_NO_THROW(Lexicon({{"autobus", "autobus"}}, {}, {}));
}

TEST(Lexicon, RejectsLemmaInTwoGroups) {
  EXPECT_THROW(Lexicon({}, {}, {{"a1", "b1"}, {"b1", "c1"}}), DataError);
}

TEST(Lexicon, LoadParsesFilesAndCanonicalizes) {
  std::istringstream lemmas("# surface\tlemma\nOspedali\tOspedale\n");
  std::istringstream stop("A\n\n");
  std::istringstream groups("Nosocomio, ospedale ,  \n");
  auto lex = Lexicon::load(lemmas, stop, groups);
  EXPECT_EQ(lex.lemmatize("ospedali"), "ospedale");
  EXPECT_TRUE(lex.is_stopword("a"));
  EXPECT_EQ(lex.synonyms("ospedale", ""), std::set<std::string>{"nosocomio"});

  std::istringstream bad("ospedali ospedale\n");
  std::istringstream s2, g2;
  try {
    Lexicon::load(bad, s2, g2);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(Lexicon, MissingFileIsNotFound) {
  EXPECT_THROW(Lexicon::load_files("/nonexistent/l", "/nonexistent/s", "/nonexistent/g"),
               NotFoundError);
}
