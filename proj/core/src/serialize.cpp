#include "semichomp/serialize.hpp"

namespace semichomp {

Json envelope(const std::string& kind, Json body) {
  Json out = Json::object();
  out["schemaVersion"] = kSchemaVersion;
  out["kind"] = kind;
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

Json semigroup_json(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = s.minimal_generators();
  j["multiplicity"] = s.multiplicity();
  j["embeddingDimension"] = s.embedding_dimension();
  j["frobenius"] = s.frobenius();
  j["gaps"] = s.gaps();
  j["gapCount"] = s.gap_count();
  j["pseudoFrobenius"] = pseudo_frobenius(s);
  j["type"] = type(s);
  j["symmetric"] = is_symmetric(s);
  j["maxEmbeddingDimension"] = is_max_embedding_dimension(s);
  return j;
}

Json apery_json(const AperySet& ap) {
  Json j;
  j["base"] = ap.base;
  j["elements"] = ap.elements;
  j["maximal"] = ap.maximal_elements;
  Json covers = Json::array();
  const std::size_t n = ap.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k || !ap.below[i][k]) continue;
      bool cover = true;
      for (std::size_t m = 0; m < n && cover; ++m)
        if (m != i && m != k && ap.below[i][m] && ap.below[m][k]) cover = false;
      if (cover) covers.push_back({ap.elements[i], ap.elements[k]});
    }
  j["covers"] = covers;
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["winner"] = std::string(to_string(v.winner));
  j["certificate"] = std::string(to_string(v.certificate));
  j["move"] = v.move ? Json(*v.move) : Json(nullptr);
  if (v.certificate == CertificateKind::kPeriodicity)
    j["window"] = {{"first", v.window_first}, {"second", v.window_second}, {"length", v.window_length}};
  j["levelsBuilt"] = v.x_max;
  j["verified"] = v.verified;
  j["counters"] = {{"evaluations", v.counters.evaluations},
                   {"levels", v.counters.levels},
                   {"validSets", v.counters.valid_sets},
                   {"memoStates", v.counters.memo_states}};
  return j;
}

Json classification_json(const ClassificationReport& r) {
  Json j;
  j["family"] = std::string(to_string(r.family));
  j["winner"] = std::string(to_string(r.winner));
  j["move"] = r.winning_move ? Json(*r.winning_move) : Json(nullptr);
  j["rule"] = r.theorem;
  Json ms = Json::array();
  for (const auto& m : r.matches)
    ms.push_back({{"family", std::string(to_string(m.family))},
                  {"rule", m.rule},
                  {"winner", std::string(to_string(m.winner))},
                  {"move", m.move ? Json(*m.move) : Json(nullptr)}});
  j["matches"] = ms;
  j["strategy"] = r.strategy ? Json{{"side", std::string(to_string(r.strategy->side))}, {"kind", r.strategy->kind}}
                             : Json(nullptr);
  j["shape"] = r.shape ? Json{{"a", r.shape->a}, {"h", r.shape->h}, {"d", r.shape->d}, {"k", r.shape->k}}
                       : Json(nullptr);
  return j;
}

Json state_json(const StateCodec& codec, const GameState& st) {
  Json j;
  j["x"] = st.x;
  std::vector<Int> c;
  for (std::size_t i = 0; i < codec.gap_count(); ++i)
    if ((st.gaps >> i) & 1u) c.push_back(codec.gap_values()[i]);
  j["gaps"] = c;
  j["elements"] = codec.elements(st);
  return j;
}

Json bound_json(const BigBound& b) {
  Json j;
  j["exponent"] = b.exponent.get_str();
  j["value"] = b.value ? Json(b.value->get_str()) : Json(nullptr);
  j["text"] = b.to_string();
  return j;
}

Json poset_json(const FinitePoset& poset, const ElementSet& position) {
  Json j;
  Json elems = Json::array();
  const bool valued = !poset.values().empty();
  position.for_each([&](std::size_t i) {
    elems.push_back(valued ? Json(poset.values()[i]) : Json(poset.label(i)));
  });
  j["elements"] = elems;
  Json covers = Json::array();
  for (auto [lo, hi] : poset.covers(position)) {
    if (valued)
      covers.push_back({poset.values()[lo], poset.values()[hi]});
    else
      covers.push_back({poset.label(lo), poset.label(hi)});
  }
  j["covers"] = covers;
  return j;
}

Json torsion_element_json(const TorsionSemigroup& s, const TorsionElement& x) {
  return Json{{"a", x.a}, {"t", s.group().name(x.t)}};
}

namespace {

Json torsion_list(const TorsionSemigroup& s, const std::vector<TorsionElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(torsion_element_json(s, x));
  return out;
}

}  // namespace

Json torsion_semigroup_json(const TorsionSemigroup& s) {
  Json j;
  j["group"] = s.group().describe();
  j["groupOrder"] = s.group().size();
  j["abelian"] = s.group().is_abelian();
  j["generators"] = torsion_list(s, s.generators());
  j["ordered"] = s.is_ordered();
  j["differencePeriod"] = s.difference_period();
  j["frobenius"] = s.frobenius();
  j["frobeniusRecipe"] = s.frobenius_recipe();
  j["identityFrobenius"] = s.identity_frobenius();
  Json minima = Json::object();
  for (std::size_t t = 0; t < s.group().size(); ++t) minima[s.group().name(t)] = s.slice_minima()[t];
  j["sliceMinima"] = minima;
  j["gaps"] = torsion_list(s, s.gaps());
  return j;
}

Json torsion_apery_json(const TorsionSemigroup& s, const TorsionApery& ap) {
  Json j;
  j["base"] = torsion_element_json(s, ap.base);
  j["elements"] = torsion_list(s, ap.elements);
  std::vector<TorsionElement> maxes;
  for (std::size_t i : ap.maximal) maxes.push_back(ap.elements[i]);
  j["maximal"] = torsion_list(s, maxes);
  return j;
}

Json error_json(const Error& e) {
  return envelope("error", Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
}

}  // namespace semichomp
