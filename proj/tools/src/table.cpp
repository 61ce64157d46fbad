#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "semichomp/service/commands.hpp"

namespace semichomp::service {

namespace {

// Search horizons printed in the published table of interval semigroups.
const std::map<std::pair<Int, Int>, Int>& published_bounds() {
  static const std::map<std::pair<Int, Int>, Int> bounds{
      {{7, 3}, 49},  {{8, 4}, 43},  {{9, 5}, 41},  {{10, 3}, 40}, {{10, 5}, 40}, {{10, 6}, 47},
      {{11, 5}, 42}, {{11, 7}, 43}, {{12, 3}, 43}, {{12, 4}, 50}, {{12, 6}, 44}, {{12, 7}, 36},
      {{12, 8}, 50}, {{13, 3}, 39}, {{13, 5}, 46}, {{13, 7}, 37}, {{13, 9}, 37}, {{14, 5}, 42},
      {{14, 7}, 42}, {{14, 8}, 49}, {{14, 9}, 40}, {{14, 10}, 50},
  };
  return bounds;
}

DeciderLimits limits_from(const std::optional<std::uint64_t>& budget) {
  DeciderLimits l;
  if (budget) l.budget = *budget;
  return l;
}

std::string a_verdict(Int move) { return "A_" + std::to_string(move); }

}  // namespace

std::optional<Int> published_cell_bound(Int a, Int k) {
  auto it = published_bounds().find({a, k});
  if (it == published_bounds().end()) return std::nullopt;
  return it->second;
}

Int default_cell_bound(Int a, Int k) { return published_cell_bound(a, k).value_or(40); }

TableCell evaluate_cell(Int a, Int k, const TableOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  TableCell cell;
  cell.a = a;
  cell.k = k;
  const NumericalSemigroup s = interval_semigroup(a, k);
  const ClassificationReport c = classify(s);
  const DeciderLimits limits = limits_from(opts.budget);
  if (c.winner != Winner::kUnknown) {
    cell.winner = c.winner;
    cell.source = "theorem";
    cell.rule = c.theorem;
    cell.move = c.winning_move;
    cell.verdict = c.winner == Winner::kB ? "B" : a_verdict(*c.winning_move);
    if (opts.check) {
      try {
        if (c.winner == Winner::kA) {
          cell.agrees = is_winning_first_move(s, *c.winning_move, limits);
        } else {
          const Int horizon = opts.bound.value_or(default_cell_bound(a, k));
          cell.agrees = !smallest_winning_move(s, horizon, limits).has_value();
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kBudgetExhausted) throw;
      }
    }
  } else {
    const Int bound = opts.bound.value_or(default_cell_bound(a, k));
    cell.source = "search";
    cell.bound = bound;
    try {
      if (auto m = smallest_winning_move(s, bound, limits)) {
        cell.winner = Winner::kA;
        cell.move = m;
        cell.verdict = a_verdict(*m);
      } else {
        cell.winner = Winner::kUnknown;
        cell.verdict = "B<=" + std::to_string(bound);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kBudgetExhausted) throw;
      cell.verdict = "?<=" + std::to_string(bound);
    }
  }
  cell.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return cell;
}

std::vector<TableCell> build_table(const TableOptions& opts) {
  if (opts.a_min < 2 || opts.a_max < opts.a_min) fail(ErrorKind::kInvalidInput, "need 2 <= a-min <= a-max");
  if (opts.k_min < 1) fail(ErrorKind::kInvalidInput, "k-min must be at least 1");
  std::vector<TableCell> cells;
  for (Int a = opts.a_min; a <= opts.a_max; ++a) {
    const Int k_hi = std::min(opts.k_max.value_or(a - 1), a - 1);
    for (Int k = opts.k_min; k <= k_hi; ++k) cells.push_back(evaluate_cell(a, k, opts));
  }
  return cells;
}

Report table_command(const TableOptions& opts) {
  const auto cells = build_table(opts);
  Report r;
  Json arr = Json::array();
  double total = 0;
  bool disagreement = false;
  for (const auto& c : cells) {
    total += c.millis;
    if (c.agrees == false) disagreement = true;
    Json j{{"a", c.a},
           {"k", c.k},
           {"winner", std::string(to_string(c.winner))},
           {"verdict", c.verdict},
           {"source", c.source},
           {"rule", c.rule.empty() ? Json(nullptr) : Json(c.rule)},
           {"move", c.move ? Json(*c.move) : Json(nullptr)},
           {"bound", c.bound ? Json(*c.bound) : Json(nullptr)}};
    if (opts.check && c.source == "theorem") j["agrees"] = c.agrees ? Json(*c.agrees) : Json(nullptr);
    arr.push_back(j);
  }
  r.json = envelope("table", Json{{"cells", arr}});

  r.csv = "a,k,verdict,source,rule,move,bound\n";
  for (const auto& c : cells)
    r.csv += std::to_string(c.a) + "," + std::to_string(c.k) + "," + c.verdict + "," + c.source + "," + c.rule + "," +
             (c.move ? std::to_string(*c.move) : "") + "," + (c.bound ? std::to_string(*c.bound) : "") + "\n";

  Int k_cols = 0;
  for (const auto& c : cells) k_cols = std::max(k_cols, c.k);
  std::ostringstream out;
  out << std::left << std::setw(5) << "a\\k";
  for (Int k = opts.k_min; k <= k_cols; ++k) out << std::setw(8) << k;
  out << "\n";
  Int row = -1;
  for (const auto& c : cells) {
    if (c.a != row) {
      if (row != -1) out << "\n";
      row = c.a;
      out << std::setw(5) << c.a;
    }
    std::string v = c.verdict;
    if (c.source == "search" && c.winner == Winner::kA) v += "*";
    if (c.agrees == false) v += "!";
    out << std::setw(8) << v;
  }
  out << "\n\nB, A_j: decided by a rule.  B<=n: no winning first move up to n.  A_j*: found by search.\n";
  if (opts.check) out << (disagreement ? "rule and search DISAGREE on cells marked !\n" : "rule cells re-checked by search: all agree\n");
  out << std::fixed << std::setprecision(2) << "total " << total / 1000.0 << " s\n";
  r.text = out.str();
  if (disagreement) r.exit_code = kExitError;
  return r;
}

Report conjecture_command(const ConjectureOptions& opts) {
  if (opts.c < 1) fail(ErrorKind::kInvalidInput, "c must be at least 1");
  DeciderLimits limits;
  if (opts.search.budget) limits.budget = *opts.search.budget;
  const Int horizon = opts.search.max.value_or(50);
  Json rows = Json::array();
  std::ostringstream out;
  out << "<a, ..., 2a-" << opts.c << ">: A should win exactly when a and c are odd\n";
  std::vector<Int> a_wins, b_wins, open;
  for (Int a = opts.a_min; a <= opts.a_max; ++a) {
    const Int k = a - opts.c;
    if (k < 1) continue;
    const NumericalSemigroup s = interval_semigroup(a, k);
    Winner w = Winner::kUnknown;
    std::optional<Int> move;
    std::string source;
    const ClassificationReport c = classify(s);
    if (c.winner != Winner::kUnknown) {
      w = c.winner;
      move = c.winning_move;
      source = c.theorem;
    } else {
      try {
        const Verdict v = decide_winner(s, limits);
        if (v.winner != Winner::kUnknown) {
          w = v.winner;
          move = v.move;
          source = std::string(to_string(v.certificate));
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kTableTooLarge && e.kind() != ErrorKind::kBudgetExhausted) throw;
      }
      if (w == Winner::kUnknown) {
        try {
          move = smallest_winning_move(s, horizon, limits);
          if (move) w = Winner::kA;
          source = "search";
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kBudgetExhausted) throw;
          source = "budget exhausted";
        }
      }
    }
    const bool predicted_a = a % 2 == 1 && opts.c % 2 == 1;
    // Only an A-win with a or c even can contradict the open direction.
    const bool candidate = w == Winner::kA && !predicted_a;
    const bool contradicts_proved = w == Winner::kB && predicted_a;
    std::string verdict = w == Winner::kA ? "A_" + std::to_string(*move)
                          : w == Winner::kB ? "B"
                          : source == "search" ? "B<=" + std::to_string(horizon)
                          : "?";
    if (w == Winner::kA) a_wins.push_back(a);
    else if (w == Winner::kB) b_wins.push_back(a);
    else open.push_back(a);
    rows.push_back({{"a", a},
                    {"generators", s.minimal_generators()},
                    {"winner", std::string(to_string(w))},
                    {"verdict", verdict},
                    {"move", move ? Json(*move) : Json(nullptr)},
                    {"source", source},
                    {"predicted", predicted_a ? "A" : "B"},
                    {"candidate", candidate},
                    {"contradiction", contradicts_proved}});
    out << "a=" << std::setw(3) << std::left << a << std::setw(22) << s.to_string() << std::setw(8) << verdict << "("
        << source << ")";
    if (candidate) out << "  <- A wins with a or c even";
    if (contradicts_proved) out << "  <- CONTRADICTS the proved direction";
    out << "\n";
  }
  auto list = [](const std::vector<Int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s.empty() ? "-" : s;
  };
  out << "A: " << list(a_wins) << "; B: " << list(b_wins);
  if (!open.empty()) out << "; undecided: " << list(open);
  out << "\n";
  Report r;
  r.json = envelope("conjecture", Json{{"c", opts.c}, {"rows", rows}});
  r.text = out.str();
  r.csv = "a,verdict,source,predicted,candidate\n";
  for (const auto& row : rows)
    r.csv += std::to_string(row["a"].get<Int>()) + "," + row["verdict"].get<std::string>() + "," +
             row["source"].get<std::string>() + "," + row["predicted"].get<std::string>() + "," +
             (row["candidate"].get<bool>() ? "1" : "0") + "\n";
  return r;
}

}  // namespace semichomp::service
