#include "semichomp/service/commands.hpp"

#include <algorithm>
#include <sstream>

namespace semichomp::service {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kParse:
    case ErrorKind::kInvalidInput:
      return kExitParse;
    case ErrorKind::kBudgetExhausted:
    case ErrorKind::kMemoOverflow:
    case ErrorKind::kTableTooLarge:
      return kExitUnknown;
    default:
      return kExitError;
  }
}

namespace {

std::string join(const std::vector<Int>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

DeciderLimits limits_from(const SearchOptions& opts) {
  DeciderLimits l;
  if (opts.budget) l.budget = *opts.budget;
  return l;
}

std::string winner_sentence(Winner w, std::optional<Int> move) {
  if (w == Winner::kA) return move ? "A wins, first move " + std::to_string(*move) : "A wins";
  if (w == Winner::kB) return "B wins";
  return "unknown";
}

}  // namespace

Report info_command(std::string_view gens) {
  const NumericalSemigroup s = semigroup_from_string(gens);
  Report r;
  Json body = semigroup_json(s);
  std::ostringstream out;
  out << "semigroup " << s.to_string() << "\n";
  out << "multiplicity " << s.multiplicity() << ", embedding dimension " << s.embedding_dimension() << "\n";
  out << "frobenius " << s.frobenius() << ", " << s.gap_count() << " gaps: " << join(s.gaps()) << "\n";
  out << "pseudo-frobenius: " << join(pseudo_frobenius(s)) << " (type " << type(s) << ")\n";
  out << "symmetric: " << (is_symmetric(s) ? "yes" : "no")
      << ", maximal embedding dimension: " << (is_max_embedding_dimension(s) ? "yes" : "no") << "\n";
  if (!s.is_naturals()) {
    const BigBound b = theoretical_bound(s);
    body["theoreticalBound"] = bound_json(b);
    out << "least winning first move, if any, is at most " << b.to_string() << "\n";
  } else {
    body["theoreticalBound"] = nullptr;
  }
  r.json = envelope("info", body);
  r.text = out.str();
  r.csv = "frobenius,gaps,type,symmetric,med\n" + std::to_string(s.frobenius()) + "," +
          std::to_string(s.gap_count()) + "," + std::to_string(type(s)) + "," + (is_symmetric(s) ? "1" : "0") +
          "," + (is_max_embedding_dimension(s) ? "1" : "0") + "\n";
  return r;
}

Report apery_command(std::string_view gens, Int x) {
  const NumericalSemigroup s = semigroup_from_string(gens);
  const AperySet ap = apery(s, x);
  Report r;
  const Json body = apery_json(ap);
  r.json = envelope("apery", Json{{"semigroup", s.minimal_generators()}, {"apery", body}});
  std::ostringstream out;
  out << "Ap(" << s.to_string() << ", " << x << ") = {" << join(ap.elements, ", ") << "}\n";
  out << "maximal: " << join(ap.maximal_elements) << "\n";
  out << "covers:";
  for (const auto& c : body["covers"]) out << " " << c[0].get<Int>() << "<" << c[1].get<Int>();
  out << "\n";
  r.text = out.str();
  r.csv = "element,maximal\n";
  for (Int e : ap.elements) {
    const bool m = std::find(ap.maximal_elements.begin(), ap.maximal_elements.end(), e) != ap.maximal_elements.end();
    r.csv += std::to_string(e) + "," + (m ? "1" : "0") + "\n";
  }
  return r;
}

Report classify_command(std::string_view gens) {
  const NumericalSemigroup s = semigroup_from_string(gens);
  const ClassificationReport c = classify(s);
  Report r;
  r.json = envelope("classification", Json{{"semigroup", s.minimal_generators()}, {"classification", classification_json(c)}});
  std::ostringstream out;
  if (c.winner == Winner::kUnknown) {
    out << "no rule applies to " << s.to_string() << "; use decide or search\n";
  } else {
    out << winner_sentence(c.winner, c.winning_move) << " (" << c.theorem << ")\n";
    for (std::size_t i = 1; i < c.matches.size(); ++i) out << "  also by " << c.matches[i].rule << "\n";
    if (c.strategy)
      out << "  strategy: side " << to_string(c.strategy->side) << ", " << c.strategy->kind << "\n";
  }
  r.text = out.str();
  r.csv = "winner,move,rule\n" + std::string(to_string(c.winner)) + "," +
          (c.winning_move ? std::to_string(*c.winning_move) : "") + "," + c.theorem + "\n";
  return r;
}

Report decide_command(std::string_view gens, const SearchOptions& opts) {
  const NumericalSemigroup s = semigroup_from_string(gens);
  const Verdict v = decide_winner(s, limits_from(opts));
  Report r;
  r.json = envelope("verdict", Json{{"semigroup", s.minimal_generators()}, {"verdict", verdict_json(v)}});
  std::ostringstream out;
  switch (v.certificate) {
    case CertificateKind::kWinningMove:
      out << winner_sentence(v.winner, v.move) << " (winning first move certificate)\n";
      break;
    case CertificateKind::kPeriodicity:
      out << "B wins (periodicity certificate)\n";
      out << "  levels " << v.window_first << ".." << v.window_first + v.window_length - 1 << " repeat at "
          << v.window_second << ".." << v.window_second + v.window_length - 1
          << (v.verified ? ", re-verified" : ", NOT re-verified") << "\n";
      break;
    case CertificateKind::kBudgetExhausted:
      out << "unknown: budget exhausted after " << v.counters.evaluations << " evaluations (levels up to " << v.x_max
          << ")\n";
      r.exit_code = kExitUnknown;
      break;
  }
  r.text = out.str();
  r.csv = "winner,certificate,move\n" + std::string(to_string(v.winner)) + "," +
          std::string(to_string(v.certificate)) + "," + (v.move ? std::to_string(*v.move) : "") + "\n";
  return r;
}

Report search_command(std::string_view gens, const SearchOptions& opts) {
  const NumericalSemigroup s = semigroup_from_string(gens);
  const Int max = opts.max.value_or(50);
  Report r;
  std::optional<Int> move;
  bool exhausted = false;
  try {
    move = smallest_winning_move(s, max, limits_from(opts));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kBudgetExhausted) throw;
    exhausted = true;
  }
  const std::string status = exhausted ? "unknown" : move ? "found" : "none";
  r.json = envelope("search", Json{{"semigroup", s.minimal_generators()},
                                   {"max", max},
                                   {"status", status},
                                   {"move", move ? Json(*move) : Json(nullptr)}});
  if (exhausted) {
    r.text = "unknown: budget exhausted below " + std::to_string(max) + "\n";
    r.exit_code = kExitUnknown;
  } else if (move) {
    r.text = "smallest winning first move: " + std::to_string(*move) + "\n";
  } else {
    r.text = "no winning first move <= " + std::to_string(max) + "\n";
  }
  r.csv = "max,status,move\n" + std::to_string(max) + "," + status + "," + (move ? std::to_string(*move) : "") + "\n";
  return r;
}

}  // namespace semichomp::service
