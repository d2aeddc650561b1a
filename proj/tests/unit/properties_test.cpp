#include <gtest/gtest.h>

#include "fixture.hpp"
#include "properties.hpp"

namespace {

std::shared_ptr<const geosem::Ontology> it_ontology() {
  static const auto o = std::make_shared<const geosem::Ontology>(
      geosem::Ontology::load_file(fixture::dir("it") / "ontology.jsonl"));
  return o;
}

}  // namespace

TEST(Properties, BboxMonotonicity) {
  const auto r = props::bbox_monotonicity(it_ontology(), 1000, 41);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
  EXPECT_EQ(r.cases, 1000u);
}

TEST(Properties, IngestIdempotence) {
  const auto r = props::ingest_idempotence(it_ontology(), 1000, 42);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
  EXPECT_EQ(r.cases, 1000u);
}
