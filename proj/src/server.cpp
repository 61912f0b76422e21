#include "mwb/server.hpp"

#include <cstdlib>

#include <httplib.h>
#include <json.hpp>

#include "mwb/session.hpp"

namespace mwb {

namespace {

void send(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <class F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      send(res, 200, f(req));
    } catch (const std::exception& e) {
      send(res, http_status(e), {{"error", e.what()}});
    }
  };
}

nlohmann::json body_of(const httplib::Request& req) {
  if (req.body.empty()) return nlohmann::json::object();
  try {
    return nlohmann::json::parse(req.body);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("request body is not JSON: ") + e.what());
  }
}

}  // namespace

int http_status(const std::exception& e) {
  if (dynamic_cast<const SessionNotFound*>(&e)) return 404;
  if (dynamic_cast<const FrozenVertex*>(&e) || dynamic_cast<const EmptyHistory*>(&e)) return 409;
  if (dynamic_cast<const Error*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e)) return 400;
  return 500;
}

void install_routes(httplib::Server& server, SessionStore& store) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  server.Get("/presets", guarded([](const httplib::Request&) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& name : preset_names())
      out.push_back({{"name", name}, {"description", preset_description(name)}});
    return out;
  }));
  server.Post("/session", guarded([&store](const httplib::Request& req) { return store.create(body_of(req)); }));
  server.Get("/session/:id", guarded([&store](const httplib::Request& req) {
    return store.get(req.path_params.at("id"));
  }));
  server.Post("/session/:id/mutate", guarded([&store](const httplib::Request& req) {
    auto body = body_of(req);
    if (!body.contains("vertex") || !body.at("vertex").is_number_integer())
      throw InvalidInput("body must be {\"vertex\": <integer>}");
    return store.mutate(req.path_params.at("id"), body.at("vertex").get<int>());
  }));
  server.Post("/session/:id/undo", guarded([&store](const httplib::Request& req) {
    return store.undo(req.path_params.at("id"));
  }));
  server.Get("/session/:id/history", guarded([&store](const httplib::Request& req) {
    return store.history(req.path_params.at("id"));
  }));
}

int default_port() {
  if (const char* p = std::getenv("MWB_PORT")) {
    char* end = nullptr;
    long v = std::strtol(p, &end, 10);
    if (end != p && *end == '\0' && v > 0 && v < 65536) return static_cast<int>(v);
  }
  return 7373;
}

}  // namespace mwb
