#include <gtest/gtest.h>

#include <csignal>
#include <filesystem>
#include <regex>

#include "fixture.hpp"
#include "httplib.h"
#include "json.hpp"
#include "process.hpp"

#ifndef GEOSEM_CLI_PATH
#error "GEOSEM_CLI_PATH must point at the geosem executable"
#endif

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("geosem_cli_test_" + std::to_string(getpid()));
    fs::create_directories(dir_);
    const auto items = fixture::dir("it") / "items";
    // Parks carry their own concepts; the rest are ingested one by one.
    ASSERT_EQ(run({"ingest", (items / "parks.geojson").string()}).exit_code, 0);
    for (const auto& [file, concept_id] : fixture::item_files()) {
      if (!concept_id) continue;
      const auto r = run({"ingest", (items / file).string(), "--concept", *concept_id});
      ASSERT_EQ(r.exit_code, 0) << r.err;
    }
  }

  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static std::vector<std::string> env() {
    return {"GEOSEM_CONFIG=" + (fixture::dir("it") / "geosem.json").string(),
            "GEOSEM_STORE=" + (dir_ / "store.jsonl").string()};
  }

  static proc::Result run(std::vector<std::string> args) {
    args.insert(args.begin(), GEOSEM_CLI_PATH);
    return proc::run(args, env());
  }

  static inline fs::path dir_;
};

}  // namespace

TEST_F(Cli, IngestReportsCounts) {
  const auto other = dir_ / "other.jsonl";
  const auto r = proc::run(
      {GEOSEM_CLI_PATH, "ingest", (fixture::dir("it") / "items" / "hospitals.geojson").string(),
       "--concept", "Ospedale"},
      {"GEOSEM_CONFIG=" + (fixture::dir("it") / "geosem.json").string(),
       "GEOSEM_STORE=" + other.string()});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("hospitals.geojson: 85 items"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(": 85 items"), std::string::npos);
  EXPECT_TRUE(fs::exists(other));
}

TEST_F(Cli, QueryWithQualifiers) {
  const auto r = run({"query", "nosocomi pediatrici a Torino"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("Ospedale"), std::string::npos);
  EXPECT_NE(r.out.find("1 items (18 before qualifier filtering)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("osp-regina-margherita"), std::string::npos);
}

TEST_F(Cli, QueryJson) {
  const auto r = run({"query", "nosocomi pediatrici a Torino", "--json"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "results");
  EXPECT_EQ(doc["features"]["features"].size(), 1u);
}

TEST_F(Cli, GammaFlagWidensTheFilter) {
  const auto base = run({"query", "scuole primarie a Torino"});
  const auto wide = run({"--gamma", "0.3", "query", "scuole primarie a Torino"});
  ASSERT_EQ(base.exit_code, 0);
  ASSERT_EQ(wide.exit_code, 0);
  EXPECT_NE(base.out.find("4 items"), std::string::npos) << base.out;
  EXPECT_NE(wide.out.find("5 items"), std::string::npos) << wide.out;
  EXPECT_EQ(run({"--gamma", "0", "query", "scuole"}).exit_code, 1);
}

TEST_F(Cli, DisambiguationWithoutTerminal) {
  const auto r = run({"query", "parchi a Torino"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("ParcoUrbano"), std::string::npos);
  EXPECT_NE(r.out.find("--select"), std::string::npos);
  const auto chosen = run({"query", "parchi a Torino", "--select", "ParcoUrbano"});
  EXPECT_EQ(chosen.exit_code, 0);
  EXPECT_NE(chosen.out.find("3 items"), std::string::npos) << chosen.out;
}

TEST_F(Cli, ViewportAndNoMatch) {
  const auto r = run({"query", "ospedali", "--viewport", "7.67,45.03,7.68,45.04"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("osp-regina-margherita"), std::string::npos);
  const auto none = run({"query", "zzz qqq"});
  EXPECT_EQ(none.exit_code, 0);
  EXPECT_NE(none.out.find("0 items"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({"query", ""}).exit_code, 1);
  EXPECT_EQ(run({"query", "a Torino"}).exit_code, 1);
  EXPECT_EQ(run({"--bogus"}).exit_code, 1);
  EXPECT_EQ(run({"ingest", "/nonexistent.geojson", "--concept", "Ospedale"}).exit_code, 2);
  EXPECT_EQ(run({"ingest", (fixture::dir("it") / "items" / "hospitals.geojson").string(),
                 "--concept", "Aeroporto"})
                .exit_code,
            2);
  EXPECT_EQ(run({"query", "parchi", "--select", "Aeroporto"}).exit_code, 2);
}

TEST_F(Cli, Eval) {
  const auto r = run({"eval", (fixture::dir("it") / "queries.jsonl").string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(std::regex_search(r.out, std::regex(R"(Only concepts\s+33\s+1\.00\s+1\.00\s+1\.00)")))
      << r.out;
  EXPECT_NE(r.out.find("Concepts + Qualifiers"), std::string::npos);
  EXPECT_NE(r.err.find("queries.jsonl:45"), std::string::npos) << r.err;

  const auto json_out = dir_ / "eval.json";
  EXPECT_EQ(run({"eval", (fixture::dir("it") / "queries.jsonl").string(), "--out",
                 json_out.string()})
                .exit_code,
            0);
  EXPECT_TRUE(fs::exists(json_out));
}

TEST_F(Cli, ServeAnswersAndStopsOnSigterm) {
  std::vector<std::string> args = {GEOSEM_CLI_PATH, "serve", "--listen", "127.0.0.1:0"};
  proc::Child child(args, env());
  ASSERT_TRUE(child.wait_for_output("listening on", 10000)) << child.output();
  std::smatch m;
  const std::string out = child.output();
  ASSERT_TRUE(std::regex_search(out, m, std::regex(R"(listening on 127\.0\.0\.1:(\d+))")));
  const int port = std::stoi(m[1]);

  httplib::Client c("127.0.0.1", port);
  auto res = c.Get("/api/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(nlohmann::json::parse(res->body)["items"], 135);

  // A second server on the same port fails to bind.
  const auto busy = proc::run(
      {GEOSEM_CLI_PATH, "serve", "--listen", "127.0.0.1:" + std::to_string(port)}, env(), 10000);
  EXPECT_EQ(busy.exit_code, 3);

  child.signal(SIGTERM);
  const auto r = child.wait();
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("stopped"), std::string::npos);
}
