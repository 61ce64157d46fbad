#include <algorithm>
#include <charconv>
#include <sstream>

#include "semichomp/service/commands.hpp"

namespace semichomp::service {

namespace {

std::string render_list(const TorsionSemigroup& s, const std::vector<TorsionElement>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + s.render(xs[i]);
  return out.empty() ? "-" : out;
}

TorsionSemigroup make(std::string_view group, std::string_view gens) {
  FiniteGroup g = parse_group(group);
  auto elems = parse_torsion_elements(gens, g);
  return TorsionSemigroup(std::move(g), std::move(elems));
}

TorsionElement single(const TorsionSemigroup& s, std::string_view x) {
  auto xs = parse_torsion_elements(x, s.group());
  if (xs.size() != 1) fail(ErrorKind::kParse, "expected one element such as (5,1)");
  return xs.front();
}

bool abelian_ordered(const TorsionSemigroup& s) { return s.group().is_abelian() && s.is_ordered(); }

}  // namespace

FiniteMonoid parse_monoid(std::string_view spec) {
  if (spec.substr(0, 7) == "capped:") {
    std::size_t n = 0;
    const auto [p, ec] = std::from_chars(spec.data() + 7, spec.data() + spec.size(), n);
    if (ec != std::errc() || p != spec.data() + spec.size() || n < 1 || n > 4096)
      fail(ErrorKind::kParse, "capped:N needs 1 <= N <= 4096");
    return FiniteMonoid::capped(n);
  }
  return parse_group(spec);
}

Report torsion_info_command(std::string_view group, std::string_view gens) {
  const TorsionSemigroup s = make(group, gens);
  Json body = torsion_semigroup_json(s);
  std::ostringstream out;
  out << "semigroup " << s.to_string() << "\n";
  out << "ordered: " << (s.is_ordered() ? "yes" : "no") << ", difference group period " << s.difference_period()
      << "\n";
  out << "frobenius " << s.frobenius() << " (constructive bound g_e + max m_t = " << s.identity_frobenius() << " + "
      << s.frobenius_recipe() - s.identity_frobenius() << " = " << s.frobenius_recipe() << ")\n";
  out << "slice minima:";
  for (std::size_t t = 0; t < s.group().size(); ++t) out << " " << s.group().name(t) << ":" << s.slice_minima()[t];
  out << "\n" << s.gaps().size() << " gaps: " << render_list(s, s.gaps()) << "\n";

  // Tightness: the contract holds just above the frobenius number and fails at it.
  const Int g = s.frobenius();
  const Int window = std::max<Int>(s.frobenius_recipe(), 1) + 1;
  std::vector<TorsionElement> at_g;
  for (const auto& x : s.gaps())
    if (x.a == g) at_g.push_back(x);
  const bool above = s.contract_holds(g, window);
  body["contract"] = {{"g", g}, {"window", window}, {"holdsAbove", above}, {"failsAt", Json::array()}};
  for (const auto& x : at_g) body["contract"]["failsAt"].push_back(torsion_element_json(s, x));
  out << "contract: every (a,u) in ZS with " << g << " < a <= " << g + window << " lies in S: "
      << (above ? "yes" : "NO") << "; fails at a = " << g << " for " << render_list(s, at_g) << "\n";

  if (s.is_ordered()) {
    body["maximalGaps"] = Json::array();
    const auto mg = maximal_gaps(s);
    for (const auto& x : mg) body["maximalGaps"].push_back(torsion_element_json(s, x));
    out << "maximal gaps: " << render_list(s, mg) << "\n";
    if (!s.gaps().empty()) {
      const BigBound b = theoretical_bound_torsion(s);
      body["theoreticalBound"] = bound_json(b);
      out << "least winning first move, if any, has first coordinate at most " << b.to_string() << "\n";
    }
  }
  if (abelian_ordered(s)) {
    const TorsionClassification c = classify_torsion(s);
    body["winner"] = std::string(to_string(c.winner));
    body["rule"] = c.rule.empty() ? Json(nullptr) : Json(c.rule);
    out << (c.winner == Winner::kB ? "B wins (" + c.rule + ")" : std::string("no rule applies")) << "\n";
  }
  Report r;
  r.json = envelope("torsion-info", body);
  r.text = out.str();
  r.csv = "frobenius,recipe,gaps,ordered\n" + std::to_string(g) + "," + std::to_string(s.frobenius_recipe()) + "," +
          std::to_string(s.gaps().size()) + "," + (s.is_ordered() ? "1" : "0") + "\n";
  return r;
}

Report torsion_apery_command(std::string_view group, std::string_view gens, std::string_view x) {
  const TorsionSemigroup s = make(group, gens);
  const TorsionElement e = single(s, x);
  const TorsionApery ap = apery_torsion(s, e);
  Report r;
  r.json = envelope("torsion-apery", torsion_apery_json(s, ap));
  std::vector<TorsionElement> maxes;
  for (std::size_t i : ap.maximal) maxes.push_back(ap.elements[i]);
  r.text = "Ap(S, " + s.render(e) + ") = " + render_list(s, ap.elements) + "\n" + std::to_string(ap.elements.size()) +
           " elements, maximal: " + render_list(s, maxes) + "\n";
  r.csv = "a,t,maximal\n";
  for (std::size_t i = 0; i < ap.elements.size(); ++i) {
    const bool m = std::find(ap.maximal.begin(), ap.maximal.end(), i) != ap.maximal.end();
    r.csv += std::to_string(ap.elements[i].a) + "," + s.group().name(ap.elements[i].t) + "," + (m ? "1" : "0") + "\n";
  }
  return r;
}

Report torsion_symmetric_command(std::string_view group, std::string_view gens) {
  const TorsionSemigroup s = make(group, gens);
  const TorsionSymmetry sym = is_symmetric_torsion(s);
  Report r;
  r.json = envelope("torsion-symmetric", Json{{"symmetric", sym.symmetric},
                                               {"witness", sym.witness ? torsion_element_json(s, *sym.witness) : Json(nullptr)},
                                               {"definitional", sym.definitional},
                                               {"byMaximum", sym.by_maximum}});
  r.text = sym.symmetric ? "symmetric, witness " + s.render(*sym.witness) + "; B wins\n" : "not symmetric\n";
  r.csv = std::string("symmetric\n") + (sym.symmetric ? "1" : "0") + "\n";
  return r;
}

Report torsion_search_command(std::string_view group, std::string_view gens, const SearchOptions& opts) {
  const TorsionSemigroup s = make(group, gens);
  const Int max = opts.max.value_or(10);
  SolveLimits limits;
  std::optional<TorsionElement> move;
  bool exhausted = false;
  try {
    move = smallest_winning_move_torsion(s, max, limits);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kMemoOverflow) throw;
    exhausted = true;
  }
  const std::string status = exhausted ? "unknown" : move ? "found" : "none";
  Report r;
  r.json = envelope("torsion-search", Json{{"max", max},
                                            {"status", status},
                                            {"move", move ? torsion_element_json(s, *move) : Json(nullptr)}});
  if (exhausted) {
    r.text = "unknown: solver memory exhausted below " + std::to_string(max) + "\n";
    r.exit_code = kExitUnknown;
  } else {
    r.text = move ? "smallest winning first move: " + s.render(*move) + "\n"
                  : "no winning first move with first coordinate <= " + std::to_string(max) + "\n";
  }
  r.csv = "max,status,move\n" + std::to_string(max) + "," + status + "," + (move ? s.render(*move) : "") + "\n";
  return r;
}

Report torsion_nicely_command(std::string_view monoid, std::string_view gens, std::optional<std::string> apery_of,
                              Int bound) {
  const FiniteMonoid t = parse_monoid(monoid);
  const auto elems = parse_torsion_elements(gens, t);
  const NicelyGenerated ng = is_nicely_generated(t, elems);
  auto render = [&](const TorsionElement& x) { return "(" + std::to_string(x.a) + "," + t.name(x.t) + ")"; };
  auto ejson = [&](const TorsionElement& x) { return Json{{"a", x.a}, {"t", t.name(x.t)}}; };
  Json body{{"nicelyGenerated", ng.nicely_generated}, {"witness", ng.witness ? ejson(*ng.witness) : Json(nullptr)}};
  std::string text = ng.nicely_generated ? "nicely generated, witness " + render(*ng.witness) + "\n"
                                         : "not nicely generated: no (a, e) with a > 0\n";
  if (apery_of) {
    auto xs = parse_torsion_elements(*apery_of, t);
    if (xs.size() != 1) fail(ErrorKind::kParse, "expected one element for --apery");
    const TruncatedApery ap = truncated_apery(t, elems, xs.front(), bound);
    Json list = Json::array();
    std::string shown;
    for (const auto& e : ap.elements) {
      list.push_back(ejson(e));
      shown += (shown.empty() ? "" : " ") + render(e);
    }
    body["apery"] = {{"elements", list}, {"bound", ap.bound}, {"truncated", ap.truncated}};
    text += "Ap(S, " + render(xs.front()) + ") up to " + std::to_string(bound) + ": " + shown + "\n" +
            (ap.truncated ? "elements survive at the bound; the set may be infinite\n" : "complete below the bound\n");
  }
  Report r;
  r.json = envelope("torsion-nicely", body);
  r.text = text;
  r.csv = std::string("nicely\n") + (ng.nicely_generated ? "1" : "0") + "\n";
  return r;
}

Report torsion_noncommutative_command(std::string_view group, std::string_view s_name, std::string_view t_name) {
  const FiniteGroup g = parse_group(group);
  const auto si = g.index_of(s_name);
  const auto ti = g.index_of(t_name);
  if (!si || !ti) fail(ErrorKind::kParse, "unknown group element");
  const NoncommutativeWitness w = noncommutative_witness(g, *si, *ti);
  const TorsionSemigroup s(g, w.generators);
  Report r;
  r.json = envelope("torsion-noncommutative", Json{{"generators", torsion_semigroup_json(s)["generators"]},
                                                    {"x", torsion_element_json(s, w.x)},
                                                    {"y", torsion_element_json(s, w.y)},
                                                    {"aperyX", torsion_apery_json(s, w.apery_x)},
                                                    {"aperyY", torsion_apery_json(s, w.apery_y)},
                                                    {"aperyXMatches", w.apery_x_matches},
                                                    {"maximalX", w.maximal_x},
                                                    {"maximalY", w.maximal_y},
                                                    {"factsHold", w.facts_hold}});
  std::ostringstream out;
  out << "S = " << s.to_string() << "\n";
  out << "Ap(S, " << s.render(w.x) << "): " << w.apery_x.elements.size() << " elements, " << w.maximal_x
      << " maximal" << (w.apery_x_matches ? " (matches the expected set)" : " (DIFFERS from the expected set)") << "\n";
  out << "Ap(S, " << s.render(w.y) << "): " << w.apery_y.elements.size() << " elements, " << w.maximal_y
      << " maximal\n";
  out << "maximal counts differ: " << (w.maximal_x != w.maximal_y ? "yes" : "no")
      << "; expected inequalities hold: " << (w.facts_hold ? "yes" : "no") << "\n";
  r.text = out.str();
  r.csv = "maximal_x,maximal_y,facts_hold\n" + std::to_string(w.maximal_x) + "," + std::to_string(w.maximal_y) + "," +
          (w.facts_hold ? "1" : "0") + "\n";
  if (!w.facts_hold) r.exit_code = kExitError;
  return r;
}

}  // namespace semichomp::service
