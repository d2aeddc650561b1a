#include <atomic>

#include "geosem/service.hpp"
#include "httplib.h"

namespace geosem {

struct HttpServer::Impl {
  std::shared_ptr<const Service> service;
  httplib::Server server;
  std::atomic<bool> bound{false};
};

namespace {

void send(httplib::Response& res, const HttpResponse& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

HttpServer::HttpServer(std::shared_ptr<const Service> service)
    : impl_(std::make_unique<Impl>()) {
  if (!service) throw InvalidArgument("http server needs a service");
  impl_->service = std::move(service);
  auto& srv = impl_->server;
  const Service* svc = impl_->service.get();

  // SO_REUSEADDR only: a port already in use must fail to bind.
  srv.set_socket_options([](auto sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });

  srv.Post("/api/query", [svc](const httplib::Request& req, httplib::Response& res) {
    send(res, svc->handle_query(req.body));
  });
  srv.Get("/api/items/:id/related",
          [svc](const httplib::Request& req, httplib::Response& res) {
            send(res, svc->handle_related(req.path_params.at("id")));
          });
  srv.Get("/api/items/:id", [svc](const httplib::Request& req, httplib::Response& res) {
    send(res, svc->handle_item_detail(req.path_params.at("id")));
  });
  srv.Get("/api/concepts", [svc](const httplib::Request&, httplib::Response& res) {
    send(res, svc->handle_concepts());
  });
  srv.Get("/api/health", [svc](const httplib::Request&, httplib::Response& res) {
    send(res, svc->handle_health());
  });
  srv.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      res.set_content(R"({"status":"error","message":"not found"})", "application/json");
    }
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (!impl_->server.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    throw Error("cannot bind " + host + ":" + std::to_string(port));
  }
  impl_->bound = true;
  return bound;
}

void HttpServer::run() {
  if (!impl_->bound) throw Error("http server: bind() must succeed before run()");
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  if (impl_ && impl_->bound) impl_->server.stop();
}

}  // namespace geosem
