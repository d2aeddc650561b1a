#include <benchmark/benchmark.h>

#include <random>

#include "geosem/config.hpp"
#include "geosem/qualifier_filter.hpp"

using namespace geosem;

namespace {

std::string random_word(std::mt19937& rng, std::size_t len) {
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w += static_cast<char>('a' + rng() % 26);
  return w;
}

std::vector<GeoItem> synthetic_items(std::size_t n) {
  std::mt19937 rng(1);
  std::vector<GeoItem> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    GeoItem item;
    item.id = "i" + std::to_string(i);
    item.concept_id = "C";
    item.geometry = Point{{7, 45}};
    item.bbox = bbox_of(item.geometry);
    item.properties["name"] = random_word(rng, 8) + " " + random_word(rng, 6);
    item.properties["gestore"] = random_word(rng, 10);
    items.push_back(std::move(item));
  }
  return items;
}

QualifierSet sample_qualifiers() {
  QualifierSet q;
  q.qualifiers.push_back({{"pediatrico"}, Qualifier::Source::kOriginal});
  q.qualifiers.push_back({{"infantile"}, Qualifier::Source::kSynonym});
  return q;
}

}  // namespace

static void BM_Levenshtein(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto a = random_word(rng, static_cast<std::size_t>(state.range(0)));
  const auto b = random_word(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(levenshtein(a, b));
}
BENCHMARK(BM_Levenshtein)->Arg(8)->Arg(16)->Arg(64);

static void BM_PropertySimilar(benchmark::State& state) {
  const QualifierMatcher m(sample_qualifiers(), {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.property_similar("Ospedale Infantile Regina Margherita"));
  }
}
BENCHMARK(BM_PropertySimilar);

static void BM_FilterItems(benchmark::State& state) {
  const auto items = synthetic_items(static_cast<std::size_t>(state.range(0)));
  const auto q = sample_qualifiers();
  for (auto _ : state) benchmark::DoNotOptimize(filter_items(items, q, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FilterItems)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_FixtureSearch(benchmark::State& state) {
  auto c = Config::load_file(std::string(GEOSEM_FIXTURE_DIR) + "/it/geosem.json");
  c.store.clear();
  auto rt = load_runtime(c);
  const std::string items = std::string(GEOSEM_FIXTURE_DIR) + "/it/items/";
  rt.store->ingest_file(items + "hospitals.geojson", "Ospedale");
  for (auto _ : state) {
    benchmark::DoNotOptimize(rt.engine->search("nosocomi pediatrici a Torino"));
  }
}
BENCHMARK(BM_FixtureSearch);

BENCHMARK_MAIN();
