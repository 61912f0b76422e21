#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "mwb/server.hpp"
#include "mwb/session.hpp"

using namespace mwb;
using nlohmann::json;

namespace {

// Server on an ephemeral port for the lifetime of the fixture.
struct Running {
  SessionStore store;
  httplib::Server server;
  std::thread thread;
  int port = 0;

  Running() {
    install_routes(server, store);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~Running() {
    server.stop();
    thread.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port);
    c.set_read_timeout(30, 0);
    return c;
  }
};

json body(const httplib::Result& r) {
  REQUIRE(r);
  return json::parse(r->body);
}

}  // namespace

TEST_CASE("session lifecycle over HTTP") {
  Running srv;
  auto cli = srv.client();

  auto created = cli.Post("/session", R"({"preset":"a3-bfz"})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 200);
  auto c = body(created);
  const std::string id = c["id"];
  CHECK(c["seed"]["quiver"]["frozen"] == json({4, 5, 6}));
  CHECK(c["seed"]["variables"][0] == "x1");

  auto got = cli.Get("/session/" + id);
  CHECK(got->status == 200);
  CHECK(got->body == created->body);

  auto m = cli.Post("/session/" + id + "/mutate", R"({"vertex":1})", "application/json");
  CHECK(m->status == 200);
  auto mj = body(m);
  CHECK(mj["seed"]["variables"][0] == "(x2+x3)/x1");
  CHECK(mj["seed"]["aliases"][0] == "D_{2,3}");
  CHECK(mj["seed"].contains("quiver"));

  auto h = cli.Get("/session/" + id + "/history");
  CHECK(h->status == 200);
  CHECK(body(h)["history"] == json({1}));
  CHECK(body(h)["seed"]["variables"].size() == 6);

  auto u = cli.Post("/session/" + id + "/undo", "", "application/json");
  CHECK(u->status == 200);
  CHECK(u->body == created->body);
}

TEST_CASE("HTTP errors") {
  Running srv;
  auto cli = srv.client();
  const std::string id = body(cli.Post("/session", R"({"preset":"affine-a1-w4"})", "application/json"))["id"];

  auto frozen = cli.Post("/session/" + id + "/mutate", R"({"vertex":4})", "application/json");
  CHECK(frozen->status == 409);
  CHECK(body(frozen).contains("error"));
  CHECK(cli.Post("/session/" + id + "/undo", "", "application/json")->status == 409);
  CHECK(cli.Get("/session/zzz")->status == 404);
  CHECK(cli.Post("/session/zzz/mutate", R"({"vertex":1})", "application/json")->status == 404);
  CHECK(cli.Get("/session/zzz/history")->status == 404);

  CHECK(cli.Post("/session/" + id + "/mutate", R"({"vertex":"one"})", "application/json")->status == 400);
  CHECK(cli.Post("/session/" + id + "/mutate", "{not json", "application/json")->status == 400);
  auto range = cli.Post("/session/" + id + "/mutate", R"({"vertex":99})", "application/json");
  CHECK(range->status == 400);
  CHECK(body(range)["error"].get<std::string>().find("vertex out of range") != std::string::npos);
  CHECK(cli.Post("/session", R"({"preset":"nope"})", "application/json")->status == 400);
  CHECK(cli.Post("/session", R"({"cartan":"A2","word":[1,1]})", "application/json")->status == 400);
  CHECK(cli.Post("/session", "[]", "application/json")->status == 400);

  // Nothing above changed the session.
  CHECK(body(cli.Get("/session/" + id))["history"] == json::array());
}

TEST_CASE("word and raw seed origins, presets listing") {
  Running srv;
  auto cli = srv.client();
  auto w = body(cli.Post("/session", R"({"cartan":"affine-a1","word":[1,2,1,2]})", "application/json"));
  CHECK(w["seed"]["rows"] == json({1, 2, 1, 2}));
  CHECK(w["seed"]["quiver"]["arrows"].size() == 5);

  json seed{{"quiver", {{"n", 2}, {"arrows", {{1, 2, 1}}}}}};
  auto s = body(cli.Post("/session", json{{"seed", seed}}.dump(), "application/json"));
  const std::string id = s["id"];
  for (int k : {1, 2, 1, 2, 1}) cli.Post("/session/" + id + "/mutate", json{{"vertex", k}}.dump(), "application/json");
  // Period 5 on the pentagon.
  CHECK(body(cli.Get("/session/" + id))["seed"]["variables"] == json({"x2", "x1"}));

  auto p = body(cli.Get("/presets"));
  CHECK(p.size() == 4);
  CHECK(p[0]["name"] == "a3-bfz");
}

TEST_CASE("concurrent clients") {
  Running srv;
  std::string shared = body(srv.client().Post("/session", R"({"preset":"a3-bfz"})", "application/json"))["id"];
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&] {
      auto cli = srv.client();
      for (int i = 0; i < 6; ++i) cli.Post("/session/" + shared + "/mutate", R"({"vertex":2})", "application/json");
    });
  for (auto& th : pool) th.join();
  auto j = body(srv.client().Get("/session/" + shared));
  CHECK(j["history"].size() == 24);
  // Even number of mutations at one vertex: back to the initial seed.
  CHECK(j["seed"]["variables"][1] == "x2");
}

TEST_CASE("status mapping and port") {
  CHECK(http_status(SessionNotFound("x")) == 404);
  CHECK(http_status(FrozenVertex("x")) == 409);
  CHECK(http_status(EmptyHistory("x")) == 409);
  CHECK(http_status(InvalidInput("x")) == 400);
  CHECK(http_status(NotReduced("x")) == 400);
  CHECK(http_status(std::runtime_error("x")) == 500);
  ::unsetenv("MWB_PORT");
  CHECK(default_port() == 7373);
  ::setenv("MWB_PORT", "8123", 1);
  CHECK(default_port() == 8123);
  ::setenv("MWB_PORT", "junk", 1);
  CHECK(default_port() == 7373);
  ::unsetenv("MWB_PORT");
}
