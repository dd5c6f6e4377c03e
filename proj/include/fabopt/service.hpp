#pragma once

// JSON-over-HTTP front end. Routes (all JSON):
//   POST /api/v1/solve   {instance, solver?}            -> solution
//   POST /api/v1/sweep   {instance, lambdas, solver?}   -> {"points": [...]}
//   GET  /api/v1/cards?query=...                        -> {"cards": [...]}
//   GET  /api/v1/health                                 -> {"status": "ok"}
// Errors are {"error", "detail", ...}: 400 for malformed or invalid input
// (with "field"), 422 when a solver refuses (with "cap" and "required").

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "fabopt/instances.hpp"
#include "fabopt/serialization.hpp"
#include "fabopt/solvers.hpp"

namespace fabopt {

struct HttpReply {
  int status = 200;
  Json body;
};

/// Request handlers, independent of any transport. The catalog is read-only,
/// so one Service may serve concurrent requests.
class Service {
 public:
  explicit Service(std::optional<CardCatalog> catalog = std::nullopt, SolveOptions options = {});

  HttpReply solve(std::string_view request_body) const;
  HttpReply sweep(std::string_view request_body) const;
  HttpReply cards(std::string_view query) const;
  HttpReply health() const;

 private:
  std::optional<CardCatalog> catalog_;
  SolveOptions options_;
};

class HttpServer {
 public:
  explicit HttpServer(const Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds `host:port`; port 0 picks a free port. Returns the bound port.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fabopt
