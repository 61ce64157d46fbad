#include "semichomp/service/session.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

namespace semichomp::service {

namespace {

std::string fnv_hex(const std::vector<Int>& elements) {
  std::uint64_t h = 1469598103934665603ull;
  std::string text;
  for (std::size_t i = 0; i < elements.size(); ++i) text += (i ? "," : "") + std::to_string(elements[i]);
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Player other(Player p) { return p == Player::kA ? Player::kB : Player::kA; }

}  // namespace

std::string_view to_string(GameSession::EngineSide side) {
  switch (side) {
    case GameSession::EngineSide::kA: return "A";
    case GameSession::EngineSide::kB: return "B";
    case GameSession::EngineSide::kNone: return "none";
  }
  return "none";
}

Response error_response(int status, const std::string& error, const std::string& message) {
  return {status, envelope("error", Json{{"error", error}, {"message", message}})};
}

GameSession::GameSession(std::string id, NumericalSemigroup s, EngineSide engine, EngineLimits limits)
    : id_(std::move(id)), s_(std::move(s)), engine_(engine), limits_(limits), report_(classify(s_)) {}

Int GameSession::horizon() const { return std::max<Int>(s_.frobenius(), 0) + 1 + s_.minimal_generators().back(); }

bool GameSession::in_position(Int element) const {
  if (!poset_) return s_.contains(element) && element <= limits_.max_first_move;
  const auto idx = poset_->index_of_value(element);
  return idx && position_.test(*idx);
}

std::vector<Int> GameSession::legal_moves() const {
  if (finished()) return {};
  if (!poset_) return s_.elements_between(0, horizon());
  std::vector<Int> out;
  position_.for_each([&](std::size_t i) { out.push_back(poset_->values()[i]); });
  return out;
}

void GameSession::apply(Int element, bool by_engine) {
  const Player mover = to_move();
  history_.push_back({mover, element, by_engine});
  if (element == 0) {
    loser_ = mover;
    return;
  }
  if (!poset_) {
    poset_ = std::make_shared<const FinitePoset>(apery_poset(s_, element));
    position_ = poset_->all();
    // Engine plan for the rest of the game.
    const auto& plan = report_.strategy;
    const bool engine_b = engine_ == EngineSide::kB;
    const bool engine_a = engine_ == EngineSide::kA;
    if (plan && ((engine_b && plan->side == Player::kB) ||
                 (engine_a && plan->side == Player::kA && plan->first_move == element))) {
      try {
        strategy_ = plan->continuation(element);
        cert_ = {"theorem", report_.theorem, false};
      } catch (const Error&) {
        strategy_.reset();
      }
    }
    if (!strategy_ && engine_ != EngineSide::kNone) {
      strategy_ = std::make_shared<SolverStrategy>(poset_, limits_.solve);
      if (cert_.source == "none" || cert_.source == "theorem") cert_ = {"search", "exact solve", false};
    }
    return;
  }
  const std::size_t idx = *poset_->index_of_value(element);
  if (!by_engine) {
    before_human_ = position_;
    last_human_ = idx;
  }
  position_ = poset_->after_move(position_, idx);
}

Int GameSession::choose_opening() {
  const Int m = s_.multiplicity();
  if (report_.strategy && report_.strategy->side == Player::kA && report_.strategy->first_move) {
    cert_ = {"theorem", report_.theorem, false};
    return *report_.strategy->first_move;
  }
  if (report_.winner == Winner::kB) {
    cert_ = {"theorem", report_.theorem, false};
    return m;
  }
  if (report_.winner == Winner::kA && report_.winning_move) {
    cert_ = {"theorem", report_.theorem, false};
    return *report_.winning_move;
  }
  try {
    DeciderLimits dl;
    dl.budget = limits_.decider_budget;
    const Verdict v = decide_winner(s_, dl);
    if (v.winner == Winner::kA && v.move && *v.move <= limits_.max_first_move) {
      cert_ = {"search", std::string(to_string(v.certificate)), false};
      return *v.move;
    }
    if (v.winner == Winner::kB) {
      cert_ = {"search", std::string(to_string(v.certificate)), false};
      return m;
    }
  } catch (const Error&) {
  }
  cert_ = {"heuristic", "", true};
  return m;
}

std::size_t GameSession::heuristic_move(Certificate& cert) const {
  std::optional<std::size_t> undecided;
  std::optional<std::size_t> fallback;
  const std::size_t bottom = poset_->minimum();
  for (std::size_t y : position_.indices()) {
    if (y == bottom) continue;
    if (!fallback) fallback = y;
    try {
      PosetSolver probe(*poset_, limits_.probe);
      if (!probe.mover_wins(poset_->after_move(position_, y))) {
        cert = {"search", "probe", false};
        return y;
      }
    } catch (const Error&) {
      if (!undecided) undecided = y;
    }
  }
  if (undecided) {
    cert = {"heuristic", "least undecided move", true};
    return *undecided;
  }
  cert = {"search", "probe", false};
  return fallback.value_or(bottom);
}

Int GameSession::choose_reply() {
  const std::size_t bottom = poset_->minimum();
  if (position_.count() == 1) return 0;
  std::optional<std::size_t> pick;
  try {
    if (last_human_)
      pick = strategy_->reply(before_human_, *last_human_);
    else
      pick = strategy_->opening(position_);
  } catch (const Error&) {
    pick.reset();
  }
  if (!pick || !position_.test(*pick) || (*pick == bottom && position_.count() > 1)) {
    // Solver exhausted its memo or the plan broke: fall back to probing.
    Certificate cert;
    pick = heuristic_move(cert);
    cert_ = cert;
  }
  return poset_->values()[*pick];
}

void GameSession::run_engine() {
  while (!finished() && engine_ != EngineSide::kNone &&
         to_move() == (engine_ == EngineSide::kA ? Player::kA : Player::kB)) {
    const Int move = poset_ ? choose_reply() : choose_opening();
    apply(move, true);
  }
}

bool GameSession::play(Int element) {
  if (finished() || !in_position(element)) return false;
  apply(element, false);
  return true;
}

Json GameSession::view() const {
  Json j;
  j["id"] = id_;
  j["generators"] = s_.minimal_generators();
  j["engineSide"] = std::string(to_string(engine_));
  j["status"] = finished() ? "finished" : "ongoing";
  j["loser"] = loser_ ? Json(std::string(to_string(*loser_))) : Json(nullptr);
  j["winner"] = loser_ ? Json(std::string(to_string(other(*loser_)))) : Json(nullptr);
  j["toMove"] = finished() ? Json(nullptr) : Json(std::string(to_string(to_move())));
  j["prediction"] = std::string(to_string(report_.winner));
  j["rule"] = report_.winner == Winner::kUnknown ? Json(nullptr) : Json(report_.theorem);

  std::vector<Int> elements;
  Json covers = Json::array();
  if (!poset_) {
    elements = s_.elements_between(0, horizon());
    const auto& atoms = s_.minimal_generators();
    for (Int x : elements)
      for (Int a : atoms)
        if (std::binary_search(elements.begin(), elements.end(), x + a)) covers.push_back({x, x + a});
    j["firstMove"] = nullptr;
    j["infinite"] = true;
    j["horizon"] = horizon();
  } else {
    const Json p = poset_json(*poset_, position_);
    elements = p["elements"].get<std::vector<Int>>();
    covers = p["covers"];
    j["firstMove"] = history_.front().element;
    j["infinite"] = false;
  }
  j["elements"] = elements;
  j["covers"] = covers;
  j["legal"] = finished() ? std::vector<Int>{} : elements;
  j["positionHash"] = fnv_hex(elements);

  Json hist = Json::array();
  for (const auto& m : history_)
    hist.push_back({{"player", std::string(to_string(m.player))}, {"move", m.element}, {"by", m.by_engine ? "engine" : "human"}});
  j["history"] = hist;
  j["engine"] = {{"source", cert_.source}, {"rule", cert_.rule}, {"unsolved", cert_.unsolved}};
  return envelope("game", j);
}

// ---------------------------------------------------------------------------

std::string SessionManager::next_id() {
  if (salt_ == 0) salt_ = (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}() ^ 1u;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(splitmix(salt_ + ++counter_)));
  return buf;
}

std::shared_ptr<SessionManager::Slot> SessionManager::find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionManager::size() const {
  std::shared_lock lock(mu_);
  return sessions_.size();
}

namespace {

std::optional<NumericalSemigroup> generators_from(const Json& request, Response& err) {
  const Json* g = nullptr;
  if (request.contains("generators")) g = &request["generators"];
  else if (request.contains("gens")) g = &request["gens"];
  if (!g) {
    err = error_response(400, "invalid-request", "missing 'generators'");
    return std::nullopt;
  }
  try {
    if (g->is_string()) return semigroup_from_string(g->get<std::string>());
    if (g->is_array()) return NumericalSemigroup(g->get<std::vector<Int>>());
    err = error_response(400, "invalid-request", "'generators' must be a string or an array");
  } catch (const Error& e) {
    err = error_response(400, std::string(to_string(e.kind())), e.what());
  } catch (const Json::exception& e) {
    err = error_response(400, "invalid-request", e.what());
  }
  return std::nullopt;
}

Response illegal(const GameSession& game, Int element) {
  Response r = error_response(409, "illegal-move", std::to_string(element) + " is not in the current position");
  r.body["legal"] = game.legal_moves();
  return r;
}

}  // namespace

Response SessionManager::create(const Json& request) {
  if (!request.is_object()) return error_response(400, "invalid-request", "expected a JSON object");
  Response err;
  auto s = generators_from(request, err);
  if (!s) return err;
  GameSession::EngineSide side = GameSession::EngineSide::kNone;
  if (request.contains("engineSide")) {
    const Json& e = request["engineSide"];
    const std::string v = e.is_string() ? e.get<std::string>() : "";
    if (v == "A") side = GameSession::EngineSide::kA;
    else if (v == "B") side = GameSession::EngineSide::kB;
    else if (v == "none" || e.is_null()) side = GameSession::EngineSide::kNone;
    else return error_response(400, "invalid-request", "engineSide must be \"A\", \"B\" or \"none\"");
  }
  std::optional<Int> first;
  if (request.contains("firstMove") && !request["firstMove"].is_null()) {
    if (!request["firstMove"].is_number_integer()) return error_response(400, "invalid-request", "firstMove must be an integer");
    if (side == GameSession::EngineSide::kA)
      return error_response(400, "invalid-request", "firstMove belongs to A, which the engine plays");
    first = request["firstMove"].get<Int>();
  }
  auto slot = std::make_shared<Slot>();
  std::string id;
  {
    std::unique_lock lock(mu_);
    id = next_id();
  }
  try {
    slot->game = std::make_unique<GameSession>(id, std::move(*s), side, limits_);
    if (first && !slot->game->play(*first)) return illegal(*slot->game, *first);
    slot->game->run_engine();
  } catch (const Error& e) {
    return error_response(400, std::string(to_string(e.kind())), e.what());
  }
  Json view = slot->game->view();
  {
    std::unique_lock lock(mu_);
    sessions_.emplace(id, std::move(slot));
  }
  return {201, std::move(view)};
}

Response SessionManager::get(const std::string& id) {
  auto slot = find(id);
  if (!slot) return error_response(404, "unknown-session", "no session " + id);
  std::lock_guard lock(slot->mu);
  if (!slot->game) return error_response(404, "unknown-session", "no session " + id);
  return {200, slot->game->view()};
}

Response SessionManager::move(const std::string& id, const Json& request) {
  auto slot = find(id);
  if (!slot) return error_response(404, "unknown-session", "no session " + id);
  if (!request.is_object() || !request.contains("element") || !request["element"].is_number_integer())
    return error_response(400, "invalid-request", "expected {\"element\": <integer>}");
  const Int element = request["element"].get<Int>();
  std::lock_guard lock(slot->mu);
  if (!slot->game) return error_response(404, "unknown-session", "no session " + id);
  GameSession& game = *slot->game;
  if (game.finished()) {
    Response r = error_response(409, "game-finished", "the game is over");
    r.body["legal"] = Json::array();
    return r;
  }
  if (!game.play(element)) return illegal(game, element);
  try {
    game.run_engine();
  } catch (const Error& e) {
    return error_response(500, std::string(to_string(e.kind())), e.what());
  }
  return {200, game.view()};
}

Response SessionManager::remove(const std::string& id) {
  std::shared_ptr<Slot> slot;
  {
    std::unique_lock lock(mu_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return error_response(404, "unknown-session", "no session " + id);
    slot = it->second;
    sessions_.erase(it);
  }
  // Wait for an in-flight move before dropping the game.
  std::lock_guard lock(slot->mu);
  slot->game.reset();
  return {200, envelope("deleted", Json{{"id", id}})};
}

Response SessionManager::classify(const std::string& generators) {
  try {
    const NumericalSemigroup s = semigroup_from_string(generators);
    const ClassificationReport r = semichomp::classify(s);
    return {200, envelope("classification", Json{{"semigroup", semigroup_json(s)}, {"classification", classification_json(r)}})};
  } catch (const Error& e) {
    return error_response(400, std::string(to_string(e.kind())), e.what());
  }
}

}  // namespace semichomp::service
