#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "newsdesk/api/service.hpp"

namespace newsdesk::api {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path static_dir;  // served at / when set
  std::string cors_origin = "*";
};

/// HTTP/1.1 front end for ApiService.
class ApiServer {
 public:
  ApiServer(const profiles::SnapshotHolder& snapshots, ServerOptions options);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds and serves on a background thread; returns the bound port.
  /// Throws ConfigError when the address cannot be bound.
  int start();
  /// Binds and serves on the calling thread until stop().
  void run();
  void stop();
  int port() const noexcept { return port_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
};

}  // namespace newsdesk::api
