// geosem: command-line front end (ingest, query, eval, serve).

#include <pthread.h>
#include <signal.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "geosem/config.hpp"
#include "geosem/eval_harness.hpp"
#include "geosem/service.hpp"
#include "geosem/text.hpp"

namespace {

using namespace geosem;

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kRuntime = 3 };

struct GlobalOptions {
  std::string config;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<std::string> rounding;
  std::optional<std::string> bbox;
};

Config load_config(const GlobalOptions& g) {
  std::string path = g.config;
  if (path.empty()) {
    if (const char* env = std::getenv("GEOSEM_CONFIG"); env && *env) path = env;
  }
  Config c = path.empty() ? Config{} : Config::load_file(path);
  c.apply_env();
  if (g.beta) c.similarity.beta = *g.beta;
  if (g.gamma) c.similarity.gamma = *g.gamma;
  if (g.rounding) c.similarity.rounding = parse_rounding(*g.rounding);
  if (g.bbox) c.default_bbox = parse_bbox(*g.bbox);
  return c;
}

std::string item_name(const GeoItem& item) {
  auto it = item.properties.find("name");
  return it == item.properties.end() ? std::string() : it->second;
}

std::string qualifier_text(const QualifierSet& q) {
  if (q.empty()) return "(none)";
  std::string out;
  for (const auto& qual : q.qualifiers) {
    if (!out.empty()) out += ' ';
    out += '[' + text::join(qual.terms, " ") + ']';
  }
  return out;
}

void print_results(const Results& r, const SearchResult& result) {
  std::cout << "concepts:   "
            << text::join({r.concepts.begin(), r.concepts.end()}, ", ") << '\n'
            << "qualifiers: " << qualifier_text(r.qualifier_set) << '\n'
            << "area:       " << (r.normalized.place ? *r.normalized.place : "(map view)")
            << " [" << format_bbox(r.bbox) << "]\n"
            << result.items.size() << " items (" << result.retrieved
            << " before qualifier filtering)\n";
  for (const auto& item : result.items) {
    std::cout << "  " << item.id << '\t' << item.concept_id << '\t' << item_name(item)
              << '\n';
  }
}

// Reads "1 3" or "1,3" from the terminal; empty input cancels.
std::optional<ConceptIds> prompt_selection(const Disambiguation& d) {
  std::cout << "Which concepts did you mean?\n";
  for (std::size_t i = 0; i < d.candidates.size(); ++i) {
    const auto& c = d.candidates[i];
    std::cout << "  " << (i + 1) << ") " << c.label << " (" << c.concept_id
              << ", keyword '" << c.matched_keyword << "')\n";
  }
  std::cout << "Select one or more numbers: " << std::flush;
  std::string line;
  if (!std::getline(std::cin, line)) return std::nullopt;
  for (auto& ch : line) {
    if (ch == ',') ch = ' ';
  }
  ConceptIds chosen;
  for (const auto& tok : text::split_ws(line)) {
    std::size_t n = 0;
    try {
      n = std::stoul(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("not a number: '" + tok + "'");
    }
    if (n == 0 || n > d.candidates.size()) {
      throw InvalidArgument("choice out of range: " + tok);
    }
    chosen.insert(d.candidates[n - 1].concept_id);
  }
  if (chosen.empty()) return std::nullopt;
  return chosen;
}

int cmd_ingest(const GlobalOptions& g, const std::vector<std::string>& files,
               const std::optional<std::string>& concept_id) {
  Config config = load_config(g);
  if (config.store.empty()) throw InvalidArgument("no store path configured");
  Runtime rt = load_runtime(config);
  for (const auto& file : files) {
    auto report = rt.store->ingest_file(file, concept_id);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << file << ": " << report.stored << " items\n";
  }
  rt.store->save_snapshot(config.store);
  std::cout << "store " << config.store.string() << ": " << rt.store->size()
            << " items\n";
  return kOk;
}

int cmd_query(const GlobalOptions& g, const std::string& query,
              const std::optional<std::string>& viewport,
              const std::vector<std::string>& select, bool as_json) {
  if (text::trim(query).empty()) throw InvalidArgument("query text is empty");
  Runtime rt = load_runtime(load_config(g));
  std::optional<BoundingBox> view;
  if (viewport) view = parse_bbox(*viewport);

  std::optional<ConceptIds> selected;
  if (!select.empty()) selected.emplace(select.begin(), select.end());

  if (as_json) {
    Service service(rt.engine);
    QueryRequest req{query, view, std::nullopt};
    if (!select.empty()) req.selected_concepts = select;
    auto resp = service.handle_query(req);
    std::cout << resp.body << '\n';
    if (resp.status == 400) return kUsage;
    return resp.status == 200 ? kOk : kRuntime;
  }

  SearchResult result = rt.engine->search(query, view, selected);
  if (const auto* d = std::get_if<Disambiguation>(&result.outcome)) {
    if (!isatty(STDIN_FILENO)) {
      std::cout << "ambiguous query; candidate concepts:\n";
      for (const auto& c : d->candidates) {
        std::cout << "  " << c.concept_id << '\t' << c.label << "\tkeyword '"
                  << c.matched_keyword << "'\n";
      }
      std::cout << "rerun with --select to choose\n";
      return kOk;
    }
    auto chosen = prompt_selection(*d);
    if (!chosen) {
      std::cout << "nothing selected\n";
      return kOk;
    }
    result = rt.engine->search(query, view, chosen);
  }
  if (const auto* r = std::get_if<Results>(&result.outcome)) {
    print_results(*r, result);
  } else {
    std::cout << "no matching concept for this query; 0 items\n";
  }
  return kOk;
}

int cmd_eval(const GlobalOptions& g, const std::string& log_path,
             const std::string& out_path) {
  Runtime rt = load_runtime(load_config(g));
  auto log = load_log_file(log_path, *rt.ontology);
  auto report = evaluate(log, *rt.engine);
  for (const auto& e : report.excluded) {
    std::cerr << "warning: " << log_path << ':' << e.line << ": excluded: " << e.reason
              << '\n';
  }
  std::cout << report.to_table();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << report.to_json();
    if (!out) throw Error("write failed for " + out_path);
  }
  return kOk;
}

int cmd_serve(const GlobalOptions& g, const std::optional<std::string>& listen) {
  Config config = load_config(g);
  if (listen) config.listen = *listen;
  Runtime rt = load_runtime(config);
  auto [host, port] = config.listen_address();

  // Signals are taken synchronously by a waiter thread; handlers are not
  // needed and every thread started afterwards inherits the mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  auto service = std::make_shared<const Service>(rt.engine);
  HttpServer server(service);
  int bound = 0;
  try {
    bound = server.bind(host, port);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  std::cout << "listening on " << host << ':' << bound << " (" << rt.ontology->size()
            << " concepts, " << rt.store->size() << " items)" << std::endl;

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.run();
  // run() only returns after stop(); wake the waiter if it is still blocked.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  std::cout << "stopped" << std::endl;
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Geographic semantic search over an ontology-backed item store"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--config", g.config, "JSON config file (default: $GEOSEM_CONFIG)");
  app.add_option("--beta", g.beta, "fraction of qualifier terms that must match");
  app.add_option("--gamma", g.gamma, "edit-distance tolerance per term");
  app.add_option("--rounding", g.rounding, "distance threshold rounding: ceil or exact");
  app.add_option("--bbox", g.bbox, "default area min_lon,min_lat,max_lon,max_lat");

  auto* ingest = app.add_subcommand("ingest", "load GeoJSON files into the item store");
  std::vector<std::string> files;
  std::optional<std::string> concept_id;
  ingest->add_option("files", files, "GeoJSON FeatureCollection files")->required();
  ingest->add_option("--concept", concept_id,
                     "concept of every feature (default: each feature's 'concept' property)");

  auto* query = app.add_subcommand("query", "interpret a query and list matching items");
  std::string query_text;
  std::optional<std::string> viewport;
  std::vector<std::string> select;
  bool as_json = false;
  query->add_option("text", query_text, "query text")->required();
  query->add_option("--viewport", viewport, "current map view min_lon,min_lat,max_lon,max_lat");
  query->add_option("--select", select, "concept ids chosen for an ambiguous query")
      ->delimiter(',');
  query->add_flag("--json", as_json, "print the service response");

  auto* eval = app.add_subcommand("eval", "score an annotated query log");
  std::string log_path, out_path;
  eval->add_option("log", log_path, "JSONL query log")->required();
  eval->add_option("--out", out_path, "write the report as JSON");

  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  std::optional<std::string> listen;
  serve->add_option("--listen", listen, "host:port (port 0 picks a free port)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*ingest) return cmd_ingest(g, files, concept_id);
    if (*query) return cmd_query(g, query_text, viewport, select, as_json);
    if (*eval) return cmd_eval(g, log_path, out_path);
    if (*serve) return cmd_serve(g, listen);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const NotFoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
