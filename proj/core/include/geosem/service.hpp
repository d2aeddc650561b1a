#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geosem/engine.hpp"

namespace geosem {

/// Body of `POST /api/query`:
///   {"text": "...", "bbox": [min_lon, min_lat, max_lon, max_lat],
///    "selected_concepts": ["ParcoUrbano"]}
/// `bbox` and `selected_concepts` are optional. Disambiguation is stateless:
/// the client resubmits the original text together with its selection.
struct QueryRequest {
  std::string text;
  std::optional<BoundingBox> bbox;
  std::optional<std::vector<std::string>> selected_concepts;
};

/// Throws InvalidArgument describing the first problem found.
QueryRequest parse_query_request(std::string_view body);

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Request handlers over a read-only search engine. Responses are JSON
/// documents; result payloads are GeoJSON FeatureCollections whose features
/// carry a `concept` property. Handlers never throw.
///
/// Query response bodies by status:
///   results         {"status","matched_concepts","qualifier_set","features"}
///   disambiguation  {"status","candidates":[{"id","label","matched_keyword"}]}
///   no_match        {"status"}
///   error           {"status","message"}
class Service {
 public:
  explicit Service(std::shared_ptr<const SearchEngine> engine);

  HttpResponse handle_query(const QueryRequest& request) const;
  HttpResponse handle_query(std::string_view body) const;
  /// Properties plus a summary of related items.
  HttpResponse handle_item_detail(std::string_view item_id) const;
  /// Related items as full features.
  HttpResponse handle_related(std::string_view item_id) const;
  HttpResponse handle_concepts() const;
  HttpResponse handle_health() const;

  /// Swaps in freshly loaded state; in-flight requests finish on the old one.
  void replace_engine(std::shared_ptr<const SearchEngine> engine);
  std::shared_ptr<const SearchEngine> engine() const;

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const SearchEngine> engine_;
};

/// HTTP binding of the service:
///   POST /api/query, GET /api/items/{id}, GET /api/items/{id}/related,
///   GET /api/concepts, GET /api/health
class HttpServer {
 public:
  explicit HttpServer(std::shared_ptr<const Service> service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket and returns the port (useful with port 0). Throws
  /// Error when the address cannot be bound.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called. Requires a successful bind().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace geosem
