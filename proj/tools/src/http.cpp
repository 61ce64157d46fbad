#include "semichomp/service/http.hpp"

#include <httplib.h>

namespace semichomp::service {

namespace {

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(r.body.dump(), "application/json");
}

// Parses the body; replies 400 and returns false on malformed JSON.
bool parse_body(const httplib::Request& req, httplib::Response& res, Json& out) {
  out = Json::parse(req.body.empty() ? "{}" : req.body, nullptr, false);
  if (out.is_discarded()) {
    send(res, error_response(400, "invalid-request", "request body is not JSON"));
    return false;
  }
  return true;
}

}  // namespace

void register_routes(httplib::Server& server, SessionManager& sessions) {
  server.Post("/game", [&sessions](const httplib::Request& req, httplib::Response& res) {
    Json body;
    if (parse_body(req, res, body)) send(res, sessions.create(body));
  });
  server.Get(R"(/game/([0-9a-f]+))", [&sessions](const httplib::Request& req, httplib::Response& res) {
    send(res, sessions.get(req.matches[1]));
  });
  server.Post(R"(/game/([0-9a-f]+)/move)", [&sessions](const httplib::Request& req, httplib::Response& res) {
    Json body;
    if (parse_body(req, res, body)) send(res, sessions.move(req.matches[1], body));
  });
  server.Delete(R"(/game/([0-9a-f]+))", [&sessions](const httplib::Request& req, httplib::Response& res) {
    send(res, sessions.remove(req.matches[1]));
  });
  server.Get("/classify", [&sessions](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("gens")) {
      send(res, error_response(400, "invalid-request", "missing query parameter 'gens'"));
      return;
    }
    send(res, sessions.classify(req.get_param_value("gens")));
  });
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      Response r = error_response(res.status, "not-found", "no such endpoint");
      res.set_content(r.body.dump(), "application/json");
    }
  });
}

bool serve(const std::string& host, int port, SessionManager& sessions) {
  httplib::Server server;
  register_routes(server, sessions);
  return server.listen(host, port);
}

}  // namespace semichomp::service
