#include "semichomp/torsion.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <limits>
#include <queue>

namespace semichomp {

std::vector<TorsionElement> parse_torsion_elements(std::string_view text, const FiniteMonoid& t) {
  std::vector<TorsionElement> out;
  std::size_t pos = 0;
  auto where = [&] { return " at offset " + std::to_string(pos); };
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') fail(ErrorKind::kParse, "expected '('" + where());
    ++pos;
    Int a = 0;
    const auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), a);
    if (ec != std::errc()) fail(ErrorKind::kParse, "expected an integer" + where());
    pos = static_cast<std::size_t>(p - text.data());
    std::size_t elem = t.identity();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      const std::size_t start = pos;
      int depth = 0;
      while (pos < text.size() && !(text[pos] == ')' && depth == 0)) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')') --depth;
        ++pos;
      }
      const std::string_view name = text.substr(start, pos - start);
      auto idx = t.index_of(name);
      if (!idx) fail(ErrorKind::kParse, "unknown group element '" + std::string(name) + "' at offset " + std::to_string(start));
      elem = *idx;
    }
    if (pos >= text.size() || text[pos] != ')') fail(ErrorKind::kParse, "expected ')'" + where());
    ++pos;
    out.push_back({a, elem});
    skip();
  }
  if (out.empty()) fail(ErrorKind::kParse, "no elements given");
  return out;
}

namespace {

constexpr Int kMaxTable = Int{1} << 22;

// Right-multiplication closure of `gens` inside [0, limit] x T.
std::vector<bool> closure_table(const FiniteMonoid& t, const std::vector<TorsionElement>& gens, Int limit) {
  const std::size_t n = t.size();
  std::vector<bool> member(static_cast<std::size_t>(limit + 1) * n, false);
  auto at = [&](Int a, std::size_t u) { return static_cast<std::size_t>(a) * n + u; };
  member[at(0, t.identity())] = true;
  for (Int a = 0; a <= limit; ++a) {
    std::vector<std::size_t> work;
    for (std::size_t u = 0; u < n; ++u)
      if (member[at(a, u)]) work.push_back(u);
    for (std::size_t w = 0; w < work.size(); ++w)
      for (const auto& g : gens)
        if (g.a == 0) {
          const std::size_t v = t.op(work[w], g.t);
          if (!member[at(a, v)]) {
            member[at(a, v)] = true;
            work.push_back(v);
          }
        }
    for (std::size_t u : work)
      for (const auto& g : gens)
        if (g.a > 0 && a + g.a <= limit) member[at(a + g.a, t.op(u, g.t))] = true;
  }
  return member;
}

}  // namespace

TorsionSemigroup::TorsionSemigroup(FiniteGroup group, std::vector<TorsionElement> generators)
    : group_(std::move(group)), generators_(std::move(generators)) {
  const std::size_t n = group_.size();
  if (!group_.is_group())
    fail(ErrorKind::kInvalidArgument,
         "the ambient monoid is not a group; only the nicely-generated test and truncated Apery sets support monoids");
  if (generators_.empty()) fail(ErrorKind::kInvalidArgument, "no generators");
  Int max_b = 0;
  for (const auto& g : generators_) {
    if (g.a < 0 || g.t >= n) fail(ErrorKind::kInvalidArgument, "generator outside N x T");
    max_b = std::max(max_b, g.a);
  }
  if (max_b == 0) fail(ErrorKind::kInvalidArgument, "S is finite: every generator has first coordinate 0");

  // Slices: the T-components reachable from e.
  std::vector<bool> reach(n, false);
  std::vector<std::size_t> work{group_.identity()};
  reach[group_.identity()] = true;
  for (std::size_t w = 0; w < work.size(); ++w)
    for (const auto& g : generators_) {
      const std::size_t v = group_.op(work[w], g.t);
      if (!reach[v]) {
        reach[v] = true;
        work.push_back(v);
      }
    }
  if (work.size() != n) {
    std::string missing;
    for (std::size_t u = 0; u < n; ++u)
      if (!reach[u]) missing += (missing.empty() ? "" : ", ") + group_.name(u);
    fail(ErrorKind::kInvalidArgument, "S_t is empty for t in {" + missing +
                                          "}; S lies in N x T' for the proper subgroup T' its generators reach");
  }

  // (a o(t), e) is in ZS for each generator, so ZS contains c0 Z x {e} and
  // reduces to a subgroup of Z/c0 x T.
  c0_ = 0;
  for (const auto& g : generators_) c0_ = std::gcd(c0_, g.a * static_cast<Int>(group_.order(g.t)));
  closure_.assign(static_cast<std::size_t>(c0_) * n, false);
  auto cl = [&](Int a, std::size_t u) { return static_cast<std::size_t>(a) * n + u; };
  std::vector<std::pair<Int, std::size_t>> queue{{0, group_.identity()}};
  closure_[cl(0, group_.identity())] = true;
  for (std::size_t w = 0; w < queue.size(); ++w)
    for (const auto& g : generators_) {
      const Int a = (queue[w].first + g.a) % c0_;
      const std::size_t u = group_.op(queue[w].second, g.t);
      if (!closure_[cl(a, u)]) {
        closure_[cl(a, u)] = true;
        queue.emplace_back(a, u);
      }
    }
  period_ = c0_;
  for (Int a = 1; a < c0_; ++a)
    if (closure_[cl(a, group_.identity())]) {
      period_ = a;
      break;
    }

  if (group_.has_factor_form()) {
    const auto& f = group_.factors();
    const std::size_t dim = 1 + f.size();
    std::vector<std::vector<Int>> rows;
    for (const auto& g : generators_) {
      std::vector<Int> r{g.a};
      for (Int x : group_.residues(g.t)) r.push_back(x);
      rows.push_back(r);
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<Int> r(dim, 0);
      r[1 + i] = f[i];
      rows.push_back(r);
    }
    lattice_.emplace(std::move(rows), dim);
  }

  // Grow the membership table until g_e, every m_t and a verification
  // window above the recipe bound are inside it.
  Int limit = std::max<Int>(64, 4 * (c0_ + max_b));
  while (true) {
    if (limit > kMaxTable) fail(ErrorKind::kTableTooLarge, "membership table would exceed 2^22 levels");
    build_table(limit);
    m_t_.assign(n, -1);
    for (Int a = 0; a <= limit; ++a)
      for (std::size_t u = 0; u < n; ++u)
        if (m_t_[u] < 0 && member_[static_cast<std::size_t>(a) * n + u]) m_t_[u] = a;
    const bool slices = std::all_of(m_t_.begin(), m_t_.end(), [](Int m) { return m >= 0; });
    Int m_e = -1;
    for (Int a = period_; a <= limit && m_e < 0; a += period_)
      if (member_[static_cast<std::size_t>(a) * n + group_.identity()]) m_e = a;
    bool found = false;
    if (slices && m_e > 0) {
      // m_e/period consecutive multiples of the period in S_e settle everything above.
      const Int need = m_e / period_;
      Int run = 0, last_missing = -1;
      for (Int a = 0; a <= limit; a += period_) {
        if (member_[static_cast<std::size_t>(a) * n + group_.identity()]) {
          if (++run >= need) {
            found = true;
            break;
          }
        } else {
          run = 0;
          last_missing = a;
        }
      }
      g_e_ = last_missing;
    }
    if (found) {
      recipe_ = g_e_ + *std::max_element(m_t_.begin(), m_t_.end());
      if (limit >= recipe_ + 2 * max_b + 1) break;
    }
    limit *= 2;
  }

  frobenius_ = -1;
  for (Int a = 0; a <= recipe_; ++a)
    for (std::size_t u = 0; u < n; ++u) {
      const TorsionElement x{a, u};
      if (in_difference_group(x) && !contains(x)) {
        gaps_.push_back(x);
        frobenius_ = a;
      }
    }
}

void TorsionSemigroup::build_table(Int limit) {
  limit_ = limit;
  member_ = closure_table(group_, generators_, limit);
}

TorsionElement TorsionSemigroup::op(const TorsionElement& x, const TorsionElement& y) const {
  return {checked_add(x.a, y.a), group_.op(x.t, y.t)};
}

TorsionElement TorsionSemigroup::inverse(const TorsionElement& x) const { return {-x.a, group_.inverse(x.t)}; }

bool TorsionSemigroup::in_difference_group_by_closure(const TorsionElement& x) const {
  const Int a = ((x.a % c0_) + c0_) % c0_;
  return closure_[static_cast<std::size_t>(a) * group_.size() + x.t];
}

bool TorsionSemigroup::in_difference_group(const TorsionElement& x) const {
  if (!lattice_) return in_difference_group_by_closure(x);
  std::vector<Int> v{x.a};
  for (Int r : group_.residues(x.t)) v.push_back(r);
  return lattice_->contains(std::move(v));
}

bool TorsionSemigroup::contains(const TorsionElement& x) const {
  if (x.a < 0) return false;
  if (x.a <= limit_) return member_[static_cast<std::size_t>(x.a) * group_.size() + x.t];
  return in_difference_group(x);
}

bool TorsionSemigroup::is_ordered() const {
  for (std::size_t u = 0; u < group_.size(); ++u)
    if (u != group_.identity() && contains({0, u})) return false;
  return true;
}

bool TorsionSemigroup::contract_holds(Int g, Int window) const {
  for (Int a = std::max<Int>(g + 1, 0); a <= g + window; ++a)
    for (std::size_t u = 0; u < group_.size(); ++u)
      if (in_difference_group({a, u}) && !contains({a, u})) return false;
  return true;
}

std::string TorsionSemigroup::render(const TorsionElement& x) const {
  return "(" + std::to_string(x.a) + "," + group_.name(x.t) + ")";
}

std::string TorsionSemigroup::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) out += (i ? "," : "") + render(generators_[i]);
  return out + "> in N x " + group_.describe();
}

TorsionApery apery_torsion(const TorsionSemigroup& s, const TorsionElement& x) {
  const auto& t = s.group();
  if (x.a == 0 && x.t == t.identity()) fail(ErrorKind::kInvalidArgument, "the Apery set of the identity is empty");
  if (!s.contains(x)) fail(ErrorKind::kInvalidArgument, s.render(x) + " is not in S");
  TorsionApery ap;
  ap.base = x;
  const TorsionElement xinv = s.inverse(x);
  // Above x.a + g every y has x^-1 y in ZS with first coordinate > g, so in S.
  const Int top = x.a + std::max<Int>(s.frobenius(), 0);
  for (Int a = 0; a <= top; ++a)
    for (std::size_t u = 0; u < t.size(); ++u) {
      const TorsionElement y{a, u};
      if (s.contains(y) && !s.contains(s.op(xinv, y))) ap.elements.push_back(y);
    }
  const std::size_t n = ap.elements.size();
  ap.below.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ap.below[i][j] = s.leq(ap.elements[i], ap.elements[j]);
  for (std::size_t i = 0; i < n; ++i) {
    bool top_elem = true;
    for (std::size_t j = 0; j < n && top_elem; ++j)
      if (j != i && ap.below[i][j]) top_elem = false;
    if (top_elem) ap.maximal.push_back(i);
  }
  return ap;
}

FinitePoset torsion_apery_poset(const TorsionSemigroup& s, const TorsionElement& x) {
  if (!s.is_ordered()) fail(ErrorKind::kInvalidArgument, "S is not ordered: some (0,t) with t != e lies in S");
  const TorsionApery ap = apery_torsion(s, x);
  std::vector<std::string> labels;
  for (const auto& e : ap.elements) labels.push_back(s.render(e));
  return FinitePoset(std::move(labels), ap.below);
}

std::vector<TorsionElement> maximal_gaps(const TorsionSemigroup& s) {
  std::vector<TorsionElement> out;
  for (const auto& y : s.gaps()) {
    bool top = true;
    for (const auto& z : s.gaps())
      if (z != y && s.leq(y, z)) top = false;
    if (top) out.push_back(y);
  }
  return out;
}

NicelyGenerated is_nicely_generated(const FiniteMonoid& t, const std::vector<TorsionElement>& generators) {
  // Least first coordinate of a product landing on e, tracking whether any
  // factor had positive first coordinate.
  const std::size_t n = t.size();
  constexpr Int kInf = std::numeric_limits<Int>::max();
  std::vector<Int> dist(2 * n, kInf);
  using Item = std::pair<Int, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[t.identity()] = 0;
  pq.emplace(0, t.identity());
  while (!pq.empty()) {
    auto [d, state] = pq.top();
    pq.pop();
    if (d != dist[state]) continue;
    const std::size_t u = state % n;
    const bool positive = state >= n;
    for (const auto& g : generators) {
      if (g.a < 0 || g.t >= n) fail(ErrorKind::kInvalidArgument, "generator outside N x T");
      const std::size_t next = t.op(u, g.t) + ((positive || g.a > 0) ? n : 0);
      if (d + g.a < dist[next]) {
        dist[next] = d + g.a;
        pq.emplace(dist[next], next);
      }
    }
  }
  NicelyGenerated out;
  if (dist[n + t.identity()] != kInf) {
    out.nicely_generated = true;
    out.witness = TorsionElement{dist[n + t.identity()], t.identity()};
  }
  return out;
}

TruncatedApery truncated_apery(const FiniteMonoid& t, const std::vector<TorsionElement>& generators,
                               const TorsionElement& x, Int bound) {
  if (bound < 0 || bound > kMaxTable) fail(ErrorKind::kInvalidArgument, "bound out of range");
  const std::size_t n = t.size();
  Int max_b = 1;
  for (const auto& g : generators) {
    if (g.a < 0 || g.t >= n) fail(ErrorKind::kInvalidArgument, "generator outside N x T");
    max_b = std::max(max_b, g.a);
  }
  const auto member = closure_table(t, generators, bound);
  auto at = [&](Int a, std::size_t u) { return static_cast<std::size_t>(a) * n + u; };
  if (x.a > bound || !member[at(x.a, x.t)]) fail(ErrorKind::kInvalidArgument, "the base is not in S below the bound");
  std::vector<bool> shifted(member.size(), false);
  for (Int a = 0; a + x.a <= bound; ++a)
    for (std::size_t u = 0; u < n; ++u)
      if (member[at(a, u)]) shifted[at(a + x.a, t.op(x.t, u))] = true;
  TruncatedApery out;
  out.bound = bound;
  for (Int a = 0; a <= bound; ++a)
    for (std::size_t u = 0; u < n; ++u)
      if (member[at(a, u)] && !shifted[at(a, u)]) {
        out.elements.push_back({a, u});
        if (a > bound - max_b) out.truncated = true;
      }
  return out;
}

namespace {

void require_abelian_ordered(const TorsionSemigroup& s) {
  if (!s.group().is_abelian()) fail(ErrorKind::kInvalidArgument, "this operation needs an abelian group");
  if (!s.is_ordered()) fail(ErrorKind::kInvalidArgument, "S is not ordered: some (0,t) with t != e lies in S");
}

}  // namespace

TorsionSymmetry is_symmetric_torsion(const TorsionSemigroup& s) {
  require_abelian_ordered(s);
  TorsionSymmetry out;
  const auto& gaps = s.gaps();
  const Int g = s.frobenius();
  for (const auto& x : gaps) {
    bool ok = true;
    for (Int a = 0; a <= g && ok; ++a)
      for (std::size_t u = 0; u < s.group().size() && ok; ++u) {
        const TorsionElement y{a, u};
        if (!s.in_difference_group(y)) continue;
        const bool gap = std::binary_search(gaps.begin(), gaps.end(), y);
        ok = gap == s.contains(s.op(x, s.inverse(y)));
      }
    if (ok) {
      out.definitional = true;
      out.witness = x;
      break;
    }
  }
  for (const auto& x : gaps) {
    if (std::all_of(gaps.begin(), gaps.end(), [&](const TorsionElement& y) { return s.leq(y, x); })) {
      out.by_maximum = true;
      break;
    }
  }
  if (out.definitional != out.by_maximum)
    fail(ErrorKind::kInternal, "the two symmetry tests disagree on " + s.to_string());
  out.symmetric = out.definitional;
  return out;
}

NoncommutativeWitness noncommutative_witness(const FiniteGroup& t, std::size_t s_elem, std::size_t t_elem) {
  if (!t.is_group()) fail(ErrorKind::kInvalidArgument, "the ambient monoid is not a group");
  if (s_elem >= t.size() || t_elem >= t.size()) fail(ErrorKind::kInvalidArgument, "element out of range");
  const std::size_t st = t.op(s_elem, t_elem);
  if (st == t.op(t_elem, s_elem)) fail(ErrorKind::kInvalidArgument, t.name(s_elem) + " and " + t.name(t_elem) + " commute");
  const std::size_t e = t.identity();
  auto in_s = [&](Int i, std::size_t u) {
    if (i == 0) return u == e;
    if (u == s_elem) return i >= 1;
    if (u == st) return i >= 3;
    return i >= 2;
  };
  NoncommutativeWitness w;
  for (Int i = 1; i <= 5; ++i)
    for (std::size_t u = 0; u < t.size(); ++u)
      if (in_s(i, u)) w.generators.push_back({i, u});
  const TorsionSemigroup sg(t, w.generators);
  for (Int i = 0; i <= 20; ++i)
    for (std::size_t u = 0; u < t.size(); ++u)
      if (sg.contains({i, u}) != in_s(i, u))
        fail(ErrorKind::kInternal, "the generated semigroup differs from the intended set at " + sg.render({i, u}));
  w.x = {2, e};
  w.y = {1, s_elem};
  w.apery_x = apery_torsion(sg, w.x);
  w.apery_y = apery_torsion(sg, w.y);
  w.expected_apery_x = {{0, e}, {3, e}, {1, s_elem}, {2, s_elem}, {3, st}, {4, st}};
  for (std::size_t u = 0; u < t.size(); ++u)
    if (u != s_elem && u != st && u != e) {
      w.expected_apery_x.push_back({2, u});
      w.expected_apery_x.push_back({3, u});
    }
  std::sort(w.expected_apery_x.begin(), w.expected_apery_x.end());
  w.apery_x_matches = w.expected_apery_x == w.apery_x.elements;
  w.maximal_x = w.apery_x.maximal.size();
  w.maximal_y = w.apery_y.maximal.size();
  const std::size_t n = t.size();
  w.facts_hold = w.maximal_x + 1 >= n && w.apery_y.elements.size() == n && w.maximal_y + 2 <= n;
  return w;
}

std::optional<TorsionElement> smallest_winning_move_torsion(const TorsionSemigroup& s, Int x_max, SolveLimits limits) {
  require_abelian_ordered(s);
  for (Int a = 0; a <= x_max; ++a)
    for (std::size_t u = 0; u < s.group().size(); ++u) {
      const TorsionElement y{a, u};
      if ((a == 0 && u == s.group().identity()) || !s.contains(y)) continue;
      const FinitePoset p = torsion_apery_poset(s, y);
      if (!solve(p, p.all(), limits).mover_wins) return y;
    }
  return std::nullopt;
}

BigBound theoretical_bound_torsion(const TorsionSemigroup& s) {
  if (s.gaps().empty()) fail(ErrorKind::kUndefinedBound, "S has no gaps; the bound is undefined");
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(s.gaps().size()));
  const mpz_class exponent = mpz_class(static_cast<long>(s.frobenius())) * static_cast<long>(s.group().size()) * two_n;
  return power_of_two_bound(exponent);
}

TorsionClassification classify_torsion(const TorsionSemigroup& s) {
  require_abelian_ordered(s);
  TorsionClassification out;
  if (is_symmetric_torsion(s).symmetric) {
    out.winner = Winner::kB;
    out.rule = "symmetric";
  }
  return out;
}

}  // namespace semichomp
