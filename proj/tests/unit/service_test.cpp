#include <doctest.h>

#include <random>
#include <thread>

#include <httplib.h>

#include "semichomp/service/commands.hpp"
#include "semichomp/service/http.hpp"
#include "semichomp/service/session.hpp"

using namespace semichomp;
using namespace semichomp::service;

namespace {

std::vector<Int> history_moves(const Json& view) {
  std::vector<Int> out;
  for (const auto& m : view["history"]) out.push_back(m["move"].get<Int>());
  return out;
}

}  // namespace

TEST_SUITE("service") {
  TEST_CASE("engine on side A opens with the rule's first move and wins") {
    SessionManager m;
    Response r = m.create(Json{{"generators", "3,4,5"}, {"engineSide", "A"}});
    CHECK(r.status == 201);
    CHECK(r.body["schemaVersion"] == kSchemaVersion);
    CHECK(history_moves(r.body) == std::vector<Int>{3});
    CHECK(r.body["elements"] == Json::array({0, 4, 5}));
    const std::string id = r.body["id"];
    r = m.move(id, Json{{"element", 4}});
    CHECK(history_moves(r.body) == std::vector<Int>{3, 4, 5});
    r = m.move(id, Json{{"element", 0}});
    CHECK(r.body["status"] == "finished");
    CHECK(r.body["loser"] == "B");
    CHECK(m.move(id, Json{{"element", 0}}).status == 409);
  }

  TEST_CASE("engine on side B answers with the maximum of the Apery set") {
    SessionManager m;
    Response r = m.create(Json{{"generators", "4,5"}, {"engineSide", "B"}});
    const std::string id = r.body["id"];
    r = m.move(id, Json{{"element", 8}});
    REQUIRE(r.status == 200);
    const AperySet ap = apery(NumericalSemigroup{4, 5}, 8);
    CHECK(history_moves(r.body) == std::vector<Int>{8, ap.maximal_elements.front()});
    CHECK(r.body["engine"]["source"] == "theorem");
  }

  TEST_CASE("maximum is not played when it loses") {
    // Ap(<4,5>, 4) = {0,5,10,15} is a chain: taking 15 loses, taking 5 wins.
    SessionManager m;
    Response r = m.create(Json{{"generators", "4,5"}, {"engineSide", "B"}});
    r = m.move(r.body["id"].get<std::string>(), Json{{"element", 4}});
    CHECK(history_moves(r.body) == std::vector<Int>{4, 5});
    CHECK(r.body["elements"] == Json::array({0}));
  }

  TEST_CASE("illegal moves are rejected without changing the game") {
    SessionManager m;
    Response r = m.create(Json{{"generators", "3,4,5"}, {"engineSide", "A"}});
    const std::string id = r.body["id"];
    const Json before = m.get(id).body;
    r = m.move(id, Json{{"element", 3}});
    CHECK(r.status == 409);
    CHECK(r.body["legal"] == Json::array({0, 4, 5}));
    CHECK(m.get(id).body == before);
    CHECK(m.move(id, Json{{"elem", 3}}).status == 400);
    CHECK(m.get("ffff").status == 404);
    CHECK(m.remove(id).status == 200);
    CHECK(m.get(id).status == 404);
    CHECK(m.create(Json{{"generators", "3,,5"}}).status == 400);
    CHECK(m.create(Json{{"generators", "3,5"}, {"engineSide", "A"}, {"firstMove", 3}}).status == 400);
  }

  TEST_CASE("first move supplied at creation") {
    SessionManager m;
    Response r = m.create(Json{{"gens", "6,7,11"}, {"engineSide", "B"}, {"firstMove", 25}});
    CHECK(r.status == 201);
    CHECK(history_moves(r.body).size() == 2);
    CHECK(r.body["firstMove"] == 25);
    r = m.create(Json{{"gens", "6,7,11"}, {"engineSide", "none"}, {"firstMove", 0}});
    CHECK(r.body["status"] == "finished");
    CHECK(r.body["loser"] == "A");
  }

  TEST_CASE("engine never loses a won game over random playouts") {
    std::mt19937 rng(11);
    SessionManager m;
    for (int game = 0; game < 50; ++game) {
      Response r = m.create(Json{{"generators", "4,5"}, {"engineSide", "B"}});
      const std::string id = r.body["id"];
      const auto firsts = r.body["legal"].get<std::vector<Int>>();
      r = m.move(id, Json{{"element", firsts[1 + rng() % (firsts.size() - 1)]}});
      while (r.body["status"] == "ongoing") {
        const auto legal = r.body["legal"].get<std::vector<Int>>();
        r = m.move(id, Json{{"element", legal[rng() % legal.size()]}});
        REQUIRE(r.status == 200);
      }
      CHECK(r.body["loser"] == "A");
    }
  }

  TEST_CASE("HTTP endpoints") {
    SessionManager sessions;
    httplib::Server server;
    register_routes(server, sessions);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread t([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client cli("127.0.0.1", port);

    auto res = cli.Post("/game", R"({"generators":"3,4,5","engineSide":"A"})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 201);
    const Json created = Json::parse(res->body);
    const std::string id = created["id"];
    res = cli.Post(("/game/" + id + "/move").c_str(), R"({"element":3})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 409);
    CHECK(Json::parse(res->body)["legal"] == Json::array({0, 4, 5}));
    res = cli.Get(("/game/" + id).c_str());
    CHECK(res->status == 200);
    CHECK(Json::parse(res->body)["positionHash"] == created["positionHash"]);
    res = cli.Get("/classify?gens=9,10,11,12");
    CHECK(res->status == 200);
    CHECK(Json::parse(res->body)["classification"]["move"] == 10);
    res = cli.Post("/game", "{not json", "application/json");
    CHECK(res->status == 400);
    res = cli.Delete(("/game/" + id).c_str());
    CHECK(res->status == 200);
    res = cli.Get(("/game/" + id).c_str());
    CHECK(res->status == 404);
    CHECK(Json::parse(res->body).contains("schemaVersion"));
    server.stop();
    t.join();
  }

  TEST_CASE("command reports") {
    CHECK(classify_command("9,10,11,12").text.rfind("A wins, first move 10 (", 0) == 0);
    CHECK(search_command("6,7,11", {30, std::nullopt}).text == "smallest winning first move: 25\n");
    CHECK(decide_command("4,5", {}).text.rfind("B wins (periodicity certificate)", 0) == 0);
    CHECK(decide_command("7,8,9,10", {std::nullopt, 100}).exit_code == kExitUnknown);
    // Machine output is deterministic.
    CHECK(table_command({}).json.dump() == table_command({}).json.dump());
    CHECK(table_command({}).csv == table_command({}).csv);
  }

  TEST_CASE("table cells and conjecture scans") {
    TableOptions o;
    CHECK(evaluate_cell(6, 3, o).verdict == "A_36");
    CHECK(evaluate_cell(7, 3, o).verdict == "B<=49");
    CHECK(evaluate_cell(5, 4, o).verdict == "A_5");
    ConjectureOptions c;
    c.c = 3;
    c.a_min = 4;
    c.a_max = 10;
    const Report r = conjecture_command(c);
    CHECK(r.text.find("A: 5,6,7,9; B: 4,8,10") != std::string::npos);
    c.c = 2;
    c.a_min = 3;
    c.a_max = 9;
    CHECK(conjecture_command(c).text.find("A: -; B: 3,4,5,6,7,8,9") != std::string::npos);
  }

  TEST_CASE("torsion commands") {
    CHECK(torsion_info_command("S3", "(3,id),(2,(12)),(4,(123))").json["frobenius"] == 13);
    CHECK(torsion_search_command("Z2", "(2,0),(3,1)", {10, std::nullopt}).json["status"] == "none");
    CHECK(torsion_noncommutative_command("S3", "(12)", "(123)").exit_code == kExitOk);
    CHECK(torsion_nicely_command("capped:2", "(3,0),(2,1),(3,2)", std::nullopt, 30).json["nicelyGenerated"] == true);
  }
}
