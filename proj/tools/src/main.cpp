#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "semichomp/service/commands.hpp"
#include "semichomp/service/http.hpp"
#include "semichomp/service/session.hpp"

using namespace semichomp;
using namespace semichomp::service;

namespace {

struct Globals {
  bool json = false;
  bool csv = false;
  std::optional<Int> max;
  std::optional<std::uint64_t> budget;
  SearchOptions search() const { return {max, budget}; }
};

int emit(const Report& r, const Globals& g) {
  if (g.json)
    std::cout << r.json.dump(2) << "\n";
  else if (g.csv)
    std::cout << r.csv;
  else
    std::cout << r.text;
  return r.exit_code;
}

// Terminal game against the engine; moves are read one per line.
int play(const std::string& gens, const std::string& engine, const Globals& g) {
  SessionManager sessions;
  Response r = sessions.create(Json{{"generators", gens}, {"engineSide", engine}});
  if (r.status >= 400) {
    std::cerr << r.body["message"].get<std::string>() << "\n";
    return r.body["error"] == "parse" ? kExitParse : kExitError;
  }
  const std::string id = r.body["id"];
  auto show = [&](const Json& view) {
    if (g.json) {
      std::cout << view.dump() << "\n";
      return;
    }
    const auto& hist = view["history"];
    if (!hist.empty()) {
      std::cout << "moves:";
      for (const auto& m : hist) std::cout << " " << m["player"].get<std::string>() << ":" << m["move"].get<Int>();
      std::cout << "\n";
    }
    if (view["status"] == "finished") {
      std::cout << view["loser"].get<std::string>() << " took 0 and loses\n";
      return;
    }
    std::cout << (view["infinite"].get<bool>() ? "S up to " + std::to_string(view["horizon"].get<Int>()) + ":"
                                              : std::string("position:"));
    for (const auto& e : view["elements"]) std::cout << " " << e.get<Int>();
    std::cout << "\n" << view["toMove"].get<std::string>() << " to move> " << std::flush;
  };
  show(r.body);
  std::string line;
  while (r.body["status"] != "finished" && std::getline(std::cin, line)) {
    if (line.empty()) continue;
    Int element = 0;
    try {
      element = std::stoll(line);
    } catch (const std::exception&) {
      std::cout << "enter an element of the position\n> " << std::flush;
      continue;
    }
    Response next = sessions.move(id, Json{{"element", element}});
    if (next.status != 200) {
      std::cout << next.body["message"].get<std::string>() << "\n> " << std::flush;
      continue;
    }
    r = next;
    show(r.body);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chomp on numerical semigroups: winners, strategies and a game service"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_flag("--csv", g.csv, "CSV output");
  app.add_option("--max", g.max, "Search horizon for first moves");
  app.add_option("--budget", g.budget, "Decider budget in state evaluations");

  std::string gens, group = "trivial", x;
  Int xi = 0;
  int exit_code = kExitOk;

  auto with_gens = [&](const char* name, const char* desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->add_option("generators", gens, "Generators, e.g. 6,7,11")->required();
    return sub;
  };
  auto* info = with_gens("info", "Frobenius number, gaps, type and bound");
  auto* ap = with_gens("apery", "Apery set Ap(S, x) with its order");
  ap->add_option("x", xi, "Element of S")->required();
  auto* cls = with_gens("classify", "Winner by the structural rules");
  auto* dec = with_gens("decide", "Winner by exhaustive search with a periodicity certificate");
  auto* sea = with_gens("search", "Smallest winning first move up to --max");

  TableOptions topts;
  auto* table = app.add_subcommand("table", "Winners on <a, ..., a+k>");
  table->fallthrough();
  table->add_option("--a-min", topts.a_min, "Smallest a")->capture_default_str();
  table->add_option("--a-max", topts.a_max, "Largest a")->capture_default_str();
  table->add_option("--k-min", topts.k_min, "Smallest k")->capture_default_str();
  table->add_option("--k-max", topts.k_max, "Largest k (default a-1)");
  table->add_flag("--check", topts.check, "Re-check rule-decided cells by search");

  ConjectureOptions copts;
  auto* conj = app.add_subcommand("conjecture", "Scan <a, ..., 2a-c> against the parity prediction");
  conj->fallthrough();
  conj->add_option("-c", copts.c, "c >= 1")->required();
  conj->add_option("--a-min", copts.a_min, "Smallest a")->capture_default_str();
  conj->add_option("--a-max", copts.a_max, "Largest a")->capture_default_str();

  auto with_torsion = [&](const char* name, const char* desc) {
    auto* sub = with_gens(name, desc);
    sub->add_option("--group", group, "Z2, Z2xZ4, S3, trivial or table:<path>")->capture_default_str();
    return sub;
  };
  auto* tinfo = with_torsion("torsion-info", "Semigroup in N x T: frobenius, gaps, bound");
  auto* tap = with_torsion("torsion-apery", "Ap(S, x) in N x T");
  tap->add_option("x", x, "Element such as (5,1)")->required();
  auto* tsym = with_torsion("torsion-symmetric", "Symmetry test in N x T");
  auto* tsea = with_torsion("torsion-search", "Smallest winning first move in N x T up to --max");
  std::optional<std::string> nicely_apery;
  Int nicely_bound = 30;
  auto* tnice = with_gens("torsion-nicely", "Nicely-generated test for a submonoid of N x T");
  tnice->add_option("--monoid", group, "A group spec or capped:N")->capture_default_str();
  tnice->add_option("--apery", nicely_apery, "Also list Ap(S, x) up to --bound");
  tnice->add_option("--bound", nicely_bound, "First-coordinate bound for --apery")->capture_default_str();
  std::string s_name = "(12)", t_name = "(123)";
  auto* tnc = app.add_subcommand("torsion-noncommutative", "Apery sets whose maximal counts differ");
  tnc->fallthrough();
  std::string nc_group = "S3";
  tnc->add_option("--group", nc_group, "A non-abelian group")->capture_default_str();
  tnc->add_option("--s", s_name, "First element")->capture_default_str();
  tnc->add_option("--t", t_name, "Second element, not commuting with the first")->capture_default_str();

  std::string engine = "B";
  auto* pl = with_gens("play", "Play against the engine on stdin");
  pl->add_option("--engine", engine, "Engine side: A, B or none")->capture_default_str();

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* srv = app.add_subcommand("serve", "JSON game service over HTTP");
  srv->fallthrough();
  srv->add_option("--host", host)->capture_default_str();
  srv->add_option("--port", port)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (info->parsed()) exit_code = emit(info_command(gens), g);
    else if (ap->parsed()) exit_code = emit(apery_command(gens, xi), g);
    else if (cls->parsed()) exit_code = emit(classify_command(gens), g);
    else if (dec->parsed()) exit_code = emit(decide_command(gens, g.search()), g);
    else if (sea->parsed()) exit_code = emit(search_command(gens, g.search()), g);
    else if (table->parsed()) {
      topts.bound = g.max;
      topts.budget = g.budget;
      exit_code = emit(table_command(topts), g);
    } else if (conj->parsed()) {
      copts.search = g.search();
      exit_code = emit(conjecture_command(copts), g);
    } else if (tinfo->parsed()) exit_code = emit(torsion_info_command(group, gens), g);
    else if (tap->parsed()) exit_code = emit(torsion_apery_command(group, gens, x), g);
    else if (tsym->parsed()) exit_code = emit(torsion_symmetric_command(group, gens), g);
    else if (tsea->parsed()) exit_code = emit(torsion_search_command(group, gens, g.search()), g);
    else if (tnice->parsed()) exit_code = emit(torsion_nicely_command(group, gens, nicely_apery, nicely_bound), g);
    else if (tnc->parsed()) exit_code = emit(torsion_noncommutative_command(nc_group, s_name, t_name), g);
    else if (pl->parsed()) exit_code = play(gens, engine, g);
    else if (srv->parsed()) {
      SessionManager sessions;
      std::cerr << "listening on http://" << host << ":" << port << "\n";
      if (!serve(host, port, sessions)) {
        std::cerr << "cannot listen on " << host << ":" << port << "\n";
        return kExitError;
      }
    }
  } catch (const Error& e) {
    if (g.json)
      std::cout << error_json(e).dump(2) << "\n";
    else
      std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  }
  return exit_code;
}
