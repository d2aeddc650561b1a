#include <gtest/gtest.h>

#include <sstream>

#include "fixture.hpp"
#include "geosem/ontology.hpp"

using namespace geosem;

namespace {

Ontology parse(const std::string& text) {
  std::istringstream in(text);
  return Ontology::load(in, "test");
}

const Ontology& it_ontology() {
  static const Ontology o = Ontology::load_file(fixture::dir("it") / "ontology.jsonl");
  return o;
}

}  // namespace

TEST(Ontology, LoadsHospitalDefinition) {
  auto o = parse(
      R"({"id":"Ospedale","label":"Ospedale","lemma":"ospedale","synonyms":["nosocomio","clinica"],"keywords":["cura","ammalato","ferito"]})");
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o.lemma_index().at("nosocomio"), ConceptIds{"Ospedale"});
  EXPECT_EQ(o.lemma_index().at("clinica"), ConceptIds{"Ospedale"});
  EXPECT_EQ(o.keyword_index().at("ferito"), ConceptIds{"Ospedale"});
}

TEST(Ontology, EmptyDocumentIsValid) {
  auto o = parse("");
  EXPECT_TRUE(o.empty());
  EXPECT_EQ(o.serialize(), "");
}

TEST(Ontology, RejectsCycle) {
  EXPECT_THROW(parse(R"({"id":"A","lemma":"a","parent":"B"}
{"id":"B","lemma":"b","parent":"A"})"),
               CycleError);
}

TEST(Ontology, RejectsDanglingReferences) {
  EXPECT_THROW(parse(R"({"id":"A","lemma":"a","parent":"Z"})"), DanglingReferenceError);
  EXPECT_THROW(parse(R"({"id":"A","lemma":"a","relations":["nearTo -> Z"]})"),
               DanglingReferenceError);
}

TEST(Ontology, ParseErrorsCarryLineNumbers) {
  try {
    parse("# comment\n{\"id\":\"A\",\"lemma\":\"a\"}\n{not json}\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.source(), "test");
  }
  try {
    parse("{\"id\":\"A\",\"lemma\":\"a\"}\n{\"id\":\"A\",\"lemma\":\"b\"}\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse(R"({"id":"A","lemma":"Ospedale"})"), ParseError);
  EXPECT_THROW(parse(R"({"id":"A"})"), ParseError);
}

TEST(Ontology, DirectMatches) {
  const auto& o = it_ontology();
  EXPECT_EQ(o.direct_matches(std::vector<std::string>{"ospedale"}), ConceptIds{"Ospedale"});
  EXPECT_EQ(o.direct_matches(std::vector<std::string>{"servizio", "pubblico"}),
            ConceptIds{"ServiziPubblici"});
  EXPECT_EQ(o.direct_matches(std::vector<std::string>{"fermata", "bus"}),
            ConceptIds{"FermataBus"});
  EXPECT_TRUE(o.direct_matches(std::vector<std::string>{"zzz"}).empty());
  EXPECT_TRUE(o.direct_matches(std::vector<std::string>{}).empty());
  // Keywords are not lemmas.
  EXPECT_TRUE(o.direct_matches(std::vector<std::string>{"parco"}).empty());
}

TEST(Ontology, PublicServicesSynonymMatchesTheSubConcept) {
  auto o = parse(R"({"id":"Servizi","lemma":"servizio","synonyms":["servizi"]}
{"id":"ServiziPubblici","lemma":"servizio pubblico","synonyms":["servizi pubblici"],"parent":"Servizi"})");
  const auto m = o.direct_matches(std::vector<std::string>{"servizi", "pubblici"});
  EXPECT_EQ(m, ConceptIds{"ServiziPubblici"});
  EXPECT_EQ(o.most_specific({"Servizi", "ServiziPubblici"}), ConceptIds{"ServiziPubblici"});
}

TEST(Ontology, KeywordMatches) {
  const auto& o = it_ontology();
  EXPECT_EQ(o.keyword_matches("cura"), ConceptIds{"Ospedale"});
  EXPECT_EQ(o.keyword_matches("parco"),
            (ConceptIds{"AreaProtetta", "ParcoProvinciale", "ParcoRegionale", "ParcoUrbano"}));
  EXPECT_TRUE(o.keyword_matches("zzz").empty());
  // Weighted keywords are indexed like plain ones.
  EXPECT_EQ(o.keyword_matches("assistenza"), ConceptIds{"Ospedale"});
  EXPECT_DOUBLE_EQ(o.get("Ospedale").keyword_weights.at("assistenza"), 0.5);
}

TEST(Ontology, MostSpecific) {
  const auto& o = it_ontology();
  EXPECT_EQ(o.most_specific({"Servizi", "ServiziPubblici"}), ConceptIds{"ServiziPubblici"});
  EXPECT_EQ(o.most_specific({"Ospedale"}), ConceptIds{"Ospedale"});
  EXPECT_EQ(o.most_specific({"Ospedale", "Museo"}), (ConceptIds{"Museo", "Ospedale"}));
  EXPECT_EQ(o.most_specific({"Servizi", "Ospedale", "AreaVerde"}),
            (ConceptIds{"AreaVerde", "Ospedale"}));
  EXPECT_THROW(o.most_specific({"Nope"}), NotFoundError);
}

TEST(Ontology, MostSpecificIsIdempotentAndAntichain) {
  const auto& o = it_ontology();
  std::vector<std::string> ids;
  for (const auto& [id, c] : o.concepts()) ids.push_back(id);
  // Every subset of the 13 concepts.
  for (std::uint32_t mask = 0; mask < (1u << ids.size()); ++mask) {
    ConceptIds in;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask & (1u << i)) in.insert(ids[i]);
    }
    const auto out = o.most_specific(in);
    ASSERT_EQ(o.most_specific(out), out);
    for (const auto& a : out) {
      for (const auto& b : out) ASSERT_FALSE(o.is_ancestor(a, b)) << a << " " << b;
    }
  }
}

TEST(Ontology, RelatedConceptsIncludeInherited) {
  const auto& o = it_ontology();
  EXPECT_EQ(o.related_concepts("Ospedale"),
            (std::vector<Relation>{{"nearTo", "Scuola"}, {"servedBy", "FermataBus"}}));
  EXPECT_EQ(o.related_concepts("ServiziPubblici"),
            (std::vector<Relation>{{"servedBy", "FermataBus"}}));
  EXPECT_EQ(o.related_concepts("Scuola"), (std::vector<Relation>{{"servedBy", "FermataBus"}}));
  EXPECT_TRUE(o.related_concepts("AreaVerde").empty());
  EXPECT_THROW(o.related_concepts("Nope"), NotFoundError);
}

TEST(Ontology, EveryLemmaAndSynonymMatchesItsConcept) {
  const auto& o = it_ontology();
  for (const auto& [id, c] : o.concepts()) {
    std::vector<std::string> all{c.lemma};
    all.insert(all.end(), c.synonym_lemmas.begin(), c.synonym_lemmas.end());
    for (const auto& s : all) {
      std::vector<std::string> words;
      std::istringstream ws(s);
      for (std::string w; ws >> w;) words.push_back(w);
      EXPECT_TRUE(o.direct_matches(words).contains(id)) << s;
    }
  }
}

TEST(Ontology, KeywordTierNeverYieldsDirectMatches) {
  const auto& o = it_ontology();
  for (const auto& [kw, ids] : o.keyword_index()) {
    for (const auto& id : o.direct_matches(std::vector<std::string>{kw})) {
      const auto& c = o.get(id);
      EXPECT_NE(std::find(c.keyword_lemmas.begin(), c.keyword_lemmas.end(), kw),
                c.keyword_lemmas.end());
    }
  }
}

TEST(Ontology, SerializationIsCanonicalAndStable) {
  const auto& o = it_ontology();
  const auto once = o.serialize();
  std::istringstream in(once);
  const auto again = Ontology::load(in).serialize();
  EXPECT_EQ(once, again);
  // Reordering the source lines does not change the serialization.
  std::vector<std::string> lines;
  std::istringstream split(once);
  for (std::string l; std::getline(split, l);) lines.push_back(l);
  std::reverse(lines.begin(), lines.end());
  std::string reversed;
  for (const auto& l : lines) reversed += l + "\n";
  std::istringstream rin(reversed);
  EXPECT_EQ(Ontology::load(rin).serialize(), once);
}
