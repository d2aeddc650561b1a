#include <gtest/gtest.h>

#include "fixture.hpp"
#include "geosem/service.hpp"
#include "json.hpp"

using namespace geosem;
using nlohmann::json;

namespace {

const Service& service() {
  static const Service s(fixture::load_it().engine);
  return s;
}

json body_of(const HttpResponse& r) { return json::parse(r.body); }

std::set<std::string> feature_ids(const json& doc) {
  std::set<std::string> out;
  for (const auto& f : doc["features"]["features"]) out.insert(f["id"].get<std::string>());
  return out;
}

}  // namespace

TEST(ParseQueryRequest, Fields) {
  const auto r = parse_query_request(
      R"({"text":"parchi","bbox":[7,45,8,46],"selected_concepts":["ParcoUrbano"]})");
  EXPECT_EQ(r.text, "parchi");
  EXPECT_EQ(r.bbox, BoundingBox::make(7, 45, 8, 46));
  EXPECT_EQ(r.selected_concepts, (std::vector<std::string>{"ParcoUrbano"}));
  EXPECT_FALSE(parse_query_request(R"({"text":"x","bbox":null})").bbox);
}

TEST(ParseQueryRequest, Rejections) {
  for (const char* body : {"", "[]", "{}", R"({"text":3})", R"({"text":"x","bbox":[1,2,3]})",
                           R"({"text":"x","bbox":["a",2,3,4]})",
                           R"({"text":"x","bbox":[8,45,7,46]})",
                           R"({"text":"x","selected_concepts":"ParcoUrbano"})"}) {
    EXPECT_THROW(parse_query_request(body), InvalidArgument) << body;
  }
}

TEST(Service, ResultsBody) {
  const auto r = service().handle_query(R"({"text":"nosocomi pediatrici a Torino"})");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "application/json");
  const auto doc = body_of(r);
  EXPECT_EQ(doc["status"], "results");
  EXPECT_EQ(doc["matched_concepts"], json::array({"Ospedale"}));
  EXPECT_EQ(doc["qualifier_set"], json::parse(R"([["pediatrico"],["infantile"]])"));
  EXPECT_EQ(doc["features"]["type"], "FeatureCollection");
  EXPECT_EQ(feature_ids(doc), std::set<std::string>{"osp-regina-margherita"});
  const auto& f = doc["features"]["features"][0];
  EXPECT_EQ(f["properties"]["concept"], "Ospedale");
  EXPECT_EQ(f["geometry"]["type"], "Polygon");
}

TEST(Service, DisambiguationRoundTrip) {
  const auto first = body_of(service().handle_query(R"({"text":"parchi a Torino"})"));
  EXPECT_EQ(first["status"], "disambiguation");
  ASSERT_EQ(first["candidates"].size(), 4u);
  EXPECT_EQ(first["candidates"][3]["id"], "ParcoUrbano");
  EXPECT_EQ(first["candidates"][3]["matched_keyword"], "parco");

  const auto second = body_of(service().handle_query(
      R"({"text":"parchi a Torino","selected_concepts":["ParcoUrbano"]})"));
  EXPECT_EQ(second["status"], "results");
  EXPECT_EQ(feature_ids(second),
            (std::set<std::string>{"park-colletta", "park-pellerina", "park-valentino"}));
}

TEST(Service, ViewportRestrictsResults) {
  const auto all = body_of(service().handle_query(R"({"text":"ospedali a Torino"})"));
  const auto some = body_of(service().handle_query(
      R"({"text":"ospedali a Torino","bbox":[7.67,45.03,7.68,45.04]})"));
  EXPECT_LT(feature_ids(some).size(), feature_ids(all).size());
  EXPECT_TRUE(feature_ids(some).contains("osp-regina-margherita"));
}

TEST(Service, NoMatchAndErrors) {
  EXPECT_EQ(body_of(service().handle_query(R"({"text":"zzz qqq"})"))["status"], "no_match");
  for (const char* body : {"not json", R"({"text":""})", R"({"text":"a Torino"})",
                           R"({"text":"ospedali","selected_concepts":["Aeroporto"]})"}) {
    const auto r = service().handle_query(body);
    EXPECT_EQ(r.status, 400) << body;
    EXPECT_EQ(body_of(r)["status"], "error");
    EXPECT_FALSE(body_of(r)["message"].get<std::string>().empty());
  }
}

TEST(Service, ItemDetailAndRelated) {
  const auto r = service().handle_item_detail("osp-regina-margherita");
  ASSERT_EQ(r.status, 200);
  const auto doc = body_of(r);
  EXPECT_EQ(doc["concept"], "Ospedale");
  EXPECT_EQ(doc["properties"]["name"], "Ospedale Infantile Regina Margherita");
  bool near_school = false;
  for (const auto& rel : doc["related"]) {
    near_school = near_school || (rel["relation"] == "nearTo" && rel["id"] == "sch-arduino");
  }
  EXPECT_TRUE(near_school);

  const auto rel = body_of(service().handle_related("osp-regina-margherita"));
  EXPECT_EQ(rel["related"].size(), doc["related"].size());
  EXPECT_EQ(rel["related"][0]["feature"]["type"], "Feature");

  EXPECT_EQ(service().handle_item_detail("nope").status, 404);
  EXPECT_EQ(service().handle_related("nope").status, 404);
}

TEST(Service, ConceptsAndHealth) {
  const auto concepts = body_of(service().handle_concepts());
  ASSERT_EQ(concepts.size(), 13u);
  for (const auto& c : concepts) {
    EXPECT_TRUE(c.contains("id"));
    EXPECT_TRUE(c.contains("label"));
    EXPECT_TRUE(c.contains("parent"));
  }
  const auto health = body_of(service().handle_health());
  EXPECT_EQ(health["status"], "ok");
  EXPECT_EQ(health["concepts"], 13);
  EXPECT_EQ(health["items"], 135);
}

TEST(Service, Deterministic) {
  const std::string q = R"({"text":"scuole primarie a Torino"})";
  EXPECT_EQ(service().handle_query(q).body, service().handle_query(q).body);
}

TEST(Service, ReplaceEngine) {
  Service s(fixture::load_it().engine);
  s.replace_engine(fixture::load_en().engine);
  EXPECT_EQ(body_of(s.handle_health())["items"], 0);
}
