#include "fabopt/service.hpp"

#include <httplib.h>

#include "fabopt/errors.hpp"
#include "fabopt/sweep.hpp"

namespace fabopt {
namespace {

HttpReply error_reply(int status, std::string_view error, std::string_view detail) {
  return {status, Json{{"error", error}, {"detail", detail}}};
}

// Maps the library's exception types onto HTTP statuses.
template <typename Fn>
HttpReply guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    HttpReply r = error_reply(400, "invalid_request", e.what());
    r.body["field"] = e.field();
    return r;
  } catch (const ParseError& e) {
    HttpReply r = error_reply(400, "malformed_json", e.what());
    r.body["line"] = e.line();
    return r;
  } catch (const LookupError& e) {
    return error_reply(400, "unknown_name", e.what());
  } catch (const RefusalError& e) {
    HttpReply r = error_reply(422, "solver_refused", e.what());
    r.body["cap"] = e.cap();
    r.body["required"] = e.required();
    return r;
  } catch (const std::exception& e) {
    return error_reply(500, "internal_error", e.what());
  }
}

Json parse_request(std::string_view body) {
  Json j = parse_json_text(body);
  if (!j.is_object()) throw ValidationError("", "request body must be a JSON object");
  return j;
}

std::optional<SolverKind> solver_field(const Json& request) {
  const auto it = request.find("solver");
  if (it == request.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw ValidationError("solver", "expected a string");
  try {
    return parse_solver_kind(it->get<std::string>());
  } catch (const LookupError& e) {
    throw ValidationError("solver", e.what());
  }
}

const Json& instance_field(const Json& request) {
  const auto it = request.find("instance");
  if (it == request.end()) throw ValidationError("instance", "missing field");
  return *it;
}

}  // namespace

Service::Service(std::optional<CardCatalog> catalog, SolveOptions options)
    : catalog_(std::move(catalog)), options_(options) {}

HttpReply Service::solve(std::string_view request_body) const {
  return guarded([&] {
    const Json request = parse_request(request_body);
    const Instance instance = instance_from_json(instance_field(request), "instance");
    const auto kind = solver_field(request);
    const SolverReport report = kind ? fabopt::solve(instance, *kind, options_) : solve_default(instance, options_);
    return HttpReply{200, to_json(report.solution)};
  });
}

HttpReply Service::sweep(std::string_view request_body) const {
  return guarded([&] {
    const Json request = parse_request(request_body);
    const Instance instance = instance_from_json(instance_field(request), "instance");
    const auto it = request.find("lambdas");
    if (it == request.end()) throw ValidationError("lambdas", "missing field");
    if (!it->is_array()) throw ValidationError("lambdas", "expected an array");
    std::vector<Lambda> lambdas;
    for (std::size_t k = 0; k < it->size(); ++k) {
      lambdas.push_back(lambda_from_json((*it)[k], "lambdas[" + std::to_string(k) + "]"));
    }
    return HttpReply{200, to_json(fabopt::sweep(instance, std::move(lambdas), solver_field(request), options_))};
  });
}

HttpReply Service::cards(std::string_view query) const {
  return guarded([&] {
    if (!catalog_) return error_reply(404, "no_catalog", "the service was started without a card catalog");
    Json list = Json::array();
    for (const Card& c : catalog_->search(query)) list.push_back(to_json(c));
    return HttpReply{200, Json{{"cards", std::move(list)}}};
  });
}

HttpReply Service::health() const { return {200, Json{{"status", "ok"}}}; }

struct HttpServer::Impl {
  explicit Impl(const Service& s) : service(s) {}
  const Service& service;
  httplib::Server server;
};

HttpServer::HttpServer(const Service& service) : impl_(std::make_unique<Impl>(service)) {
  auto& server = impl_->server;
  const Service* svc = &impl_->service;
  const auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  };
  server.Post("/api/v1/solve", [svc, send](const httplib::Request& req, httplib::Response& res) {
    send(res, svc->solve(req.body));
  });
  server.Post("/api/v1/sweep", [svc, send](const httplib::Request& req, httplib::Response& res) {
    send(res, svc->sweep(req.body));
  });
  server.Get("/api/v1/cards", [svc, send](const httplib::Request& req, httplib::Response& res) {
    send(res, svc->cards(req.has_param("query") ? req.get_param_value("query") : std::string()));
  });
  server.Get("/api/v1/health", [svc, send](const httplib::Request&, httplib::Response& res) {
    send(res, svc->health());
  });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    res.set_content(Json{{"error", "not_found"}, {"detail", "no such route"}}.dump(), "application/json");
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error("cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace fabopt
