#include "newsdesk/api/server.hpp"

#include <thread>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::api {

struct ApiServer::Impl {
  ApiService service;
  ServerOptions options;
  httplib::Server http;
  std::thread thread;

  Impl(const profiles::SnapshotHolder& snapshots, ServerOptions opts)
      : service(snapshots), options(std::move(opts)) {}
};

ApiServer::ApiServer(const profiles::SnapshotHolder& snapshots, ServerOptions options)
    : impl_(std::make_unique<Impl>(snapshots, std::move(options))) {
  auto& http = impl_->http;
  const std::string origin = impl_->options.cors_origin;
  http.set_default_headers({{"Access-Control-Allow-Origin", origin},
                            {"Access-Control-Allow-Methods", "GET, HEAD, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    Query q;
    for (const auto& [k, v] : req.params) q.emplace(k, v);
    const auto out = impl_->service.handle(req.method, req.path, q);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json; charset=utf-8");
  };
  for (const char* pattern : {R"(/v1(/.*)?)"}) {
    http.Get(pattern, handler);
    http.Post(pattern, handler);
    http.Put(pattern, handler);
    http.Delete(pattern, handler);
    http.Patch(pattern, handler);
    http.Options(pattern, [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  }
  if (!impl_->options.static_dir.empty()) {
    if (!http.set_mount_point("/", impl_->options.static_dir.string())) {
      throw ConfigError("static dir not found: " + impl_->options.static_dir.string());
    }
  }
  http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    const auto out = error_response(res.status, res.status == 404 ? ErrorCode::not_found
                                                 : res.status >= 500 ? ErrorCode::internal
                                                                     : ErrorCode::bad_request,
                                    "cannot serve " + req.path);
    res.set_content(out.body.dump(), "application/json; charset=utf-8");
  });
}

ApiServer::~ApiServer() { stop(); }

namespace {

int bind_server(httplib::Server& http, const ServerOptions& o) {
  const int port = o.port == 0 ? http.bind_to_any_port(o.host)
                               : (http.bind_to_port(o.host, o.port) ? o.port : -1);
  if (port <= 0) throw ConfigError("cannot bind " + o.host + ":" + std::to_string(o.port));
  spdlog::info("api listening on {}:{}", o.host, port);
  return port;
}

}  // namespace

int ApiServer::start() {
  port_ = bind_server(impl_->http, impl_->options);
  impl_->thread = std::thread([this] { impl_->http.listen_after_bind(); });
  return port_;
}

void ApiServer::run() {
  port_ = bind_server(impl_->http, impl_->options);
  impl_->http.listen_after_bind();
}

void ApiServer::stop() {
  impl_->http.stop();
  if (impl_->thread.joinable() && impl_->thread.get_id() != std::this_thread::get_id()) {
    impl_->thread.join();
  }
}

}  // namespace newsdesk::api
