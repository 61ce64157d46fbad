#include "semichomp/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace semichomp {

Int ArithmeticShape::element(Int j, Int l) const { return j * (h * a + k * d) - k * d + l * d; }

std::vector<std::pair<Int, Int>> ArithmeticShape::coordinates() const {
  std::vector<std::pair<Int, Int>> out{{0, k}};
  for (Int j = 1; j <= s; ++j)
    for (Int l = 1; l <= (j == s ? t : k); ++l) out.emplace_back(j, l);
  return out;
}

std::vector<Int> ArithmeticShape::closed_form_apery() const {
  std::vector<Int> out;
  for (Int i = 0; i < a; ++i) out.push_back(((i + k - 1) / k) * h * a + i * d);
  std::sort(out.begin(), out.end());
  return out;
}

bool ArithmeticShape::symmetric_by_shape() const { return (a - 2) % k == 0; }

std::string ArithmeticShape::to_string() const {
  return "a=" + std::to_string(a) + " h=" + std::to_string(h) + " d=" + std::to_string(d) + " k=" +
         std::to_string(k);
}

std::optional<ArithmeticShape> detect_shape(const NumericalSemigroup& s) {
  const auto& g = s.minimal_generators();
  if (g.size() < 2) return std::nullopt;
  ArithmeticShape sh;
  sh.a = g[0];
  sh.k = static_cast<Int>(g.size()) - 1;
  if (sh.k == 1) {
    sh.h = 1;
    sh.d = g[1] - g[0];
  } else {
    sh.d = g[2] - g[1];
    for (std::size_t i = 2; i < g.size(); ++i)
      if (g[i] - g[i - 1] != sh.d) return std::nullopt;
    const Int base = g[1] - sh.d;
    if (base <= 0 || base % sh.a != 0) return std::nullopt;
    sh.h = base / sh.a;
  }
  if (std::gcd(sh.a, sh.d) != 1 || sh.k >= sh.a) return std::nullopt;
  sh.t = (sh.a - 1) % sh.k;
  if (sh.t == 0) sh.t = sh.k;
  sh.s = (sh.a - 1 + sh.k - 1) / sh.k;
  sh.interval = sh.h == 1 && sh.d == 1;
  return sh;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kNaturals: return "naturals";
    case Family::kSymmetric: return "symmetric";
    case Family::kMaxEmbeddingDimension: return "MED";
    case Family::kArithmetic: return "generalized-arithmetic";
    case Family::kInterval: return "interval";
    case Family::kInterval3k: return "interval-3k-4k";
    case Family::kInterval2aMinus3: return "interval-2a-3";
    case Family::kNone: return "none";
  }
  return "none";
}

namespace {

NumericalSemigroup shape_semigroup(const ArithmeticShape& sh) {
  std::vector<Int> gens{sh.a};
  for (Int i = 1; i <= sh.k; ++i) gens.push_back(sh.h * sh.a + i * sh.d);
  return NumericalSemigroup(gens);
}

std::size_t index_of(const FinitePoset& p, Int v) {
  auto i = p.index_of_value(v);
  if (!i) fail(ErrorKind::kInternal, std::to_string(v) + " is missing from the poset");
  return *i;
}

// Least element of `position` other than the minimum, by value.
std::optional<std::size_t> least_nonzero(const FinitePoset& p, const ElementSet& position) {
  std::optional<std::size_t> out;
  position.for_each([&](std::size_t i) {
    if (i == p.minimum()) return;
    if (!out || p.values()[i] < p.values()[*out]) out = i;
  });
  return out;
}

}  // namespace

Int med_layer(const NumericalSemigroup& s, Int x) {
  const Int m = s.multiplicity();
  if (x % m == 0) return x / m;
  for (Int w : apery(s, m).elements)
    if (w % m == x % m) return (x - w) / m + 1;
  fail(ErrorKind::kInternal, "residue class without an Apery element");
}

SemigroupStrategy med_strategy(const NumericalSemigroup& s, Player side) {
  if (!is_max_embedding_dimension(s))
    fail(ErrorKind::kInvalidArgument, s.to_string() + " does not have maximal embedding dimension");
  const Int m = s.multiplicity();
  const bool odd = m % 2 == 1;
  if ((side == Player::kA) != odd)
    fail(ErrorKind::kNoStrategy, std::string("player ") + std::string(to_string(side)) + " has no winning strategy on " +
                                     s.to_string() + " (multiplicity " + std::to_string(m) + ")");
  SemigroupStrategy out;
  out.side = side;
  if (side == Player::kA) {
    out.first_move = m;
    out.kind = "med-antichain";
    out.continuation = [s, m](Int first) -> StrategyPtr {
      if (first != m) fail(ErrorKind::kNoStrategy, "side A opens with the multiplicity");
      auto p = std::make_shared<const FinitePoset>(apery_poset(s, m));
      // Ap(S, m) is 0 below an antichain of even size: answer with any other element.
      return std::make_shared<FunctionStrategy>(p, "med-antichain", [p](const ElementSet& before, std::size_t move) {
        return least_nonzero(*p, p->after_move(before, move)).value_or(p->minimum());
      });
    };
    return out;
  }
  out.kind = "med-layers";
  out.continuation = [s, m](Int first) -> StrategyPtr {
    auto p = std::make_shared<const FinitePoset>(apery_poset(s, first));
    std::vector<Int> layer(p->size());
    for (std::size_t i = 0; i < p->size(); ++i) layer[i] = med_layer(s, p->values()[i]);
    // Answer a pick in layer mu by mu*m when still there, else by the least
    // remaining element of the same layer.
    auto answer = [p, layer, m](const ElementSet& after, Int x) -> std::size_t {
      const Int mu = layer[static_cast<std::size_t>(p->index_of_value(x).value_or(0))];
      if (auto i = p->index_of_value(mu * m); i && after.test(*i) && *i != p->minimum()) return *i;
      std::optional<std::size_t> best;
      after.for_each([&](std::size_t i) {
        if (i != p->minimum() && layer[i] == mu && (!best || p->values()[i] < p->values()[*best])) best = i;
      });
      if (best) return *best;
      return least_nonzero(*p, after).value_or(p->minimum());
    };
    auto layer_of = [s](Int x) { return med_layer(s, x); };
    return std::make_shared<FunctionStrategy>(
        p, "med-layers",
        [p, answer](const ElementSet& before, std::size_t move) {
          return answer(p->after_move(before, move), p->values()[move]);
        },
        [p, first, m, layer_of](const ElementSet& position) -> std::size_t {
          // The opening answers A's first move as if it were a pick in its layer.
          const Int mu = layer_of(first);
          if (auto i = p->index_of_value(mu * m); i && position.test(*i) && *i != p->minimum()) return *i;
          std::optional<std::size_t> best;
          position.for_each([&](std::size_t i) {
            if (i != p->minimum() && layer_of(p->values()[i]) == mu &&
                (!best || p->values()[i] < p->values()[*best]))
              best = i;
          });
          if (best) return *best;
          return least_nonzero(*p, position).value_or(p->minimum());
        });
  };
  return out;
}

Involution arithmetic_involution(const ArithmeticShape& sh) {
  if (sh.k % 2 != 0)
    fail(ErrorKind::kInvalidArgument, "the layer pairing needs k even (" + sh.to_string() + ")");
  const NumericalSemigroup s = shape_semigroup(sh);
  const FinitePoset full = apery_poset(s, sh.a);
  Involution out;
  ElementSet keep = full.all();
  if (sh.a % 2 == 0) {
    out.removed = sh.element(sh.s, sh.t);
    keep.reset(index_of(full, *out.removed));
  }
  out.poset = std::make_shared<const FinitePoset>(full.restricted_to(keep));
  const FinitePoset& p = *out.poset;
  out.phi.resize(p.size());
  for (auto [j, l] : sh.coordinates()) {
    const Int v = sh.element(j, l);
    if (out.removed && v == *out.removed) continue;
    const Int l2 = j == 0 ? l : (l % 2 == 1 ? l + 1 : l - 1);
    out.phi[index_of(p, v)] = index_of(p, sh.element(j, l2));
  }
  return out;
}

SemigroupStrategy arithmetic_strategy(const ArithmeticShape& sh) {
  if (sh.a % 2 == 0 || sh.k % 2 != 0)
    fail(ErrorKind::kNoStrategy, "first move a wins only for a odd and k even (" + sh.to_string() + ")");
  SemigroupStrategy out;
  out.side = Player::kA;
  out.first_move = sh.a;
  out.kind = "pairing";
  out.continuation = [sh](Int first) -> StrategyPtr {
    if (first != sh.a) fail(ErrorKind::kNoStrategy, "side A opens with a");
    Involution inv = arithmetic_involution(sh);
    return pairing_strategy(inv.poset, inv.phi);
  };
  return out;
}

StrategyPtr arithmetic_even_answer(const ArithmeticShape& sh) {
  if (sh.a % 2 != 0 || sh.k % 2 != 0)
    fail(ErrorKind::kInvalidArgument, "the even answer needs a and k even (" + sh.to_string() + ")");
  Involution inv = arithmetic_involution(sh);
  const PairingReport report = check_pairing(*inv.poset, inv.phi);
  if (!report.valid) fail(ErrorKind::kInternal, report.message);
  auto p = std::make_shared<const FinitePoset>(apery_poset(shape_semigroup(sh), sh.a));
  // phi in the indices of the full Apery poset.
  std::vector<std::size_t> phi(p->size(), p->size());
  for (std::size_t i = 0; i < inv.poset->size(); ++i)
    phi[index_of(*p, inv.poset->values()[i])] = index_of(*p, inv.poset->values()[inv.phi[i]]);
  const std::size_t y = index_of(*p, *inv.removed);
  return std::make_shared<FunctionStrategy>(
      p, "pairing",
      [p, phi](const ElementSet& before, std::size_t move) {
        const std::size_t r = phi[move];
        if (r >= p->size() || !p->after_move(before, move).test(r))
          fail(ErrorKind::kInternal, "no partner for " + p->label(move));
        return r;
      },
      [y](const ElementSet&) { return y; });
}

Involution interval_3k_involution(Int k) {
  if (k < 3 || k % 2 == 0) fail(ErrorKind::kInvalidArgument, "k must be odd and at least 3");
  const NumericalSemigroup s = interval_semigroup(3 * k, k);
  Involution out;
  out.poset = std::make_shared<const FinitePoset>(apery_poset(s, 3 * k + 1));
  const FinitePoset& p = *out.poset;
  out.phi.resize(p.size());
  std::iota(out.phi.begin(), out.phi.end(), std::size_t{0});
  for (Int i = 2; i + 3 <= k; i += 2)
    for (Int row : {3 * k, 7 * k, 11 * k}) {
      const std::size_t x = index_of(p, row + i), y = index_of(p, row + i + 1);
      out.phi[x] = y;
      out.phi[y] = x;
    }
  return out;
}

std::vector<Int> ten_element_embedding(Int k) {
  std::vector<Int> out{0};
  for (Int i = 1; i <= 3; ++i) {
    out.push_back(3 * i * k);
    out.push_back(4 * i * k - 1);
    out.push_back(4 * i * k);
  }
  // ten_element_poset() orders x_ij at 1 + (i-1)*3 + (j-1): x_i1, x_i2, x_i3.
  return out;
}

std::optional<std::string> ten_element_reply(const std::string& label) {
  static const std::array<std::pair<const char*, const char*>, 9> kTable{{
      {"x11", "x32"},
      {"x32", "x11"},
      {"x21", "x13"},
      {"x13", "x21"},
      {"x31", "x12"},
      {"x12", "x31"},
      {"x23", "x31"},
      {"x22", "x33"},
      {"x33", "x22"},
  }};
  for (auto [from, to] : kTable)
    if (label == from) return std::string(to);
  return std::nullopt;
}

SemigroupStrategy interval_3k_strategy(Int k) {
  if (k < 3 || k % 2 == 0) fail(ErrorKind::kInvalidArgument, "k must be odd and at least 3");
  SemigroupStrategy out;
  out.side = Player::kA;
  out.first_move = 3 * k + 1;
  out.kind = "pairing";
  out.continuation = [k](Int first) -> StrategyPtr {
    if (first != 3 * k + 1) fail(ErrorKind::kNoStrategy, "side A opens with 3k+1");
    Involution inv = interval_3k_involution(k);
    const FinitePoset ten = ten_element_poset();
    const std::vector<Int> emb = ten_element_embedding(k);
    std::vector<std::size_t> to_ap(ten.size());
    for (std::size_t i = 0; i < ten.size(); ++i) to_ap[i] = index_of(*inv.poset, emb[i]);
    auto p = inv.poset;
    // On the untouched fixed part, answer with the ten-element table.
    auto fixed_reply = [p, ten, to_ap](const ElementSet& fixed_before,
                                        std::size_t move) -> std::optional<std::size_t> {
      for (std::size_t i : to_ap)
        if (!fixed_before.test(i)) return std::nullopt;
      for (std::size_t i = 0; i < to_ap.size(); ++i)
        if (to_ap[i] == move) {
          auto r = ten_element_reply(ten.label(i));
          if (!r) return std::nullopt;
          return to_ap[*ten.index_of(*r)];
        }
      return std::nullopt;
    };
    return pairing_strategy(inv.poset, inv.phi, {}, fixed_reply);
  };
  return out;
}

SemigroupStrategy symmetric_strategy(const NumericalSemigroup& s) {
  if (!is_symmetric(s)) fail(ErrorKind::kNoStrategy, s.to_string() + " is not symmetric");
  SemigroupStrategy out;
  out.side = Player::kB;
  out.kind = "global-maximum";
  out.continuation = [s](Int first) -> StrategyPtr {
    auto poset = std::make_shared<const FinitePoset>(apery_poset(s, first));
    const auto tops = poset->maximal_elements(poset->all());
    if (tops.size() != 1) fail(ErrorKind::kInternal, "Ap(S, a) of a symmetric semigroup has one maximum");
    // A unique maximum guarantees a winning answer exists, not that the
    // maximum is one (on a chain it is not), so it is kept only when it wins.
    auto solver = std::make_shared<SolverStrategy>(poset);
    const std::size_t top = tops.front();
    const bool top_wins = !solve(*poset, poset->after_move(poset->all(), top)).mover_wins;
    return std::make_shared<FunctionStrategy>(
        poset, "global-maximum",
        [solver](const ElementSet& before, std::size_t move) { return solver->reply(before, move); },
        [solver, top, top_wins](const ElementSet& position) { return top_wins ? top : solver->opening(position); });
  };
  return out;
}

ClassificationReport classify(const NumericalSemigroup& s) {
  ClassificationReport r;
  r.shape = detect_shape(s);
  auto add = [&](Family f, std::string rule, Winner w, std::optional<Int> move) {
    r.matches.push_back({f, std::move(rule), w, move});
  };
  if (s.is_naturals()) {
    add(Family::kNaturals, "naturals", Winner::kA, 1);
  } else {
    if (is_symmetric(s)) add(Family::kSymmetric, "symmetric", Winner::kB, std::nullopt);
    if (is_max_embedding_dimension(s)) {
      const Int m = s.multiplicity();
      if (m % 2 == 1)
        add(Family::kMaxEmbeddingDimension, "med-parity", Winner::kA, m);
      else
        add(Family::kMaxEmbeddingDimension, "med-parity", Winner::kB, std::nullopt);
    }
    if (const auto& sh = r.shape) {
      const Family f = sh->interval ? Family::kInterval : Family::kArithmetic;
      if (sh->k == 2) {
        if (sh->a % 2 == 1)
          add(f, "arithmetic-three-generators", Winner::kA, sh->a);
        else
          add(f, "arithmetic-three-generators", Winner::kB, std::nullopt);
      }
      if (sh->a % 2 == 1 && sh->k % 2 == 0) add(f, "arithmetic-odd-even", Winner::kA, sh->a);
      if (sh->interval && sh->k >= 3 && sh->k % 2 == 1 && sh->a == 3 * sh->k)
        add(Family::kInterval3k, "interval-3k-pairing", Winner::kA, 3 * sh->k + 1);
      if (sh->interval && sh->k == sh->a - 3) {
        if (sh->a % 2 == 1)
          add(Family::kInterval2aMinus3, "interval-2a-3", Winner::kA, sh->a);
        else if (sh->a == 6)
          add(Family::kInterval2aMinus3, "interval-2a-3", Winner::kA, 36);
        else
          add(Family::kInterval2aMinus3, "interval-2a-3", Winner::kB, std::nullopt);
      }
    }
  }
  if (r.matches.empty()) return r;
  for (const auto& m : r.matches)
    if (m.winner != r.matches.front().winner)
      fail(ErrorKind::kInternal, "rules " + r.matches.front().rule + " and " + m.rule + " disagree on " + s.to_string());
  const auto& top = r.matches.front();
  r.family = top.family;
  r.winner = top.winner;
  r.winning_move = top.move;
  r.theorem = top.rule;

  // First matching rule whose argument yields an executable strategy.
  for (const auto& m : r.matches) {
    if (m.rule == "symmetric") {
      r.strategy = symmetric_strategy(s);
    } else if (m.rule == "med-parity") {
      r.strategy = med_strategy(s, m.winner == Winner::kA ? Player::kA : Player::kB);
    } else if ((m.rule == "arithmetic-three-generators" || m.rule == "arithmetic-odd-even") &&
               m.winner == Winner::kA) {
      r.strategy = arithmetic_strategy(*r.shape);
    } else if (m.rule == "interval-3k-pairing") {
      r.strategy = interval_3k_strategy(r.shape->k);
    } else if (m.rule == "interval-2a-3") {
      const Int a = r.shape->a;
      if (a % 2 == 1) {
        r.strategy = arithmetic_strategy(*r.shape);
      } else if (a == 6) {
        SemigroupStrategy st;
        st.side = Player::kA;
        st.first_move = 36;
        st.kind = "solver";
        st.continuation = [s](Int first) -> StrategyPtr {
          if (first != 36) fail(ErrorKind::kNoStrategy, "side A opens with 36");
          return std::make_shared<SolverStrategy>(std::make_shared<const FinitePoset>(apery_poset(s, 36)));
        };
        r.strategy = st;
      } else if (a >= 8) {
        r.strategy = interval_2am3_b_strategy(a);
      }
    }
    if (r.strategy) break;
  }
  return r;
}

}  // namespace semichomp
