#include "semichomp/decider.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "semichomp/poset.hpp"

namespace semichomp {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

bool test_bit(const std::vector<std::uint64_t>& bits, std::size_t i) { return (bits[i >> 6] >> (i & 63)) & 1u; }

std::uint64_t hash_words(const std::vector<std::uint64_t>& words) {
  std::uint64_t h = 0x243f6a8885a308d3ull ^ words.size();
  for (auto w : words) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h ^= z ^ (z >> 31);
  }
  return h;
}

}  // namespace

CodecSolver::CodecSolver(NumericalSemigroup s, DeciderLimits limits, bool table_mode)
    : codec_(std::move(s)), limits_(limits), table_mode_(table_mode) {
  const std::size_t n = codec_.gap_count();
  if (!table_mode_) return;
  if (n > limits_.max_table_gaps)
    fail(ErrorKind::kTableTooLarge, codec_.semigroup().to_string() + " has " + std::to_string(n) +
                                        " gaps; full W tables are limited to " +
                                        std::to_string(limits_.max_table_gaps) + " (use bounded search)");
  // Down-closed gap sets, deciding gaps in increasing value (every gap below
  // c_i in the gap order is a smaller number, hence already decided).
  std::vector<std::uint64_t> stack{0};
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t need = codec_.below(i) & ~bit(i);
    const std::size_t count = stack.size();
    for (std::size_t k = 0; k < count; ++k)
      if ((stack[k] & need) == need) stack.push_back(stack[k] | bit(i));
  }
  valid_ = std::move(stack);
  std::sort(valid_.begin(), valid_.end());
  index_.assign(std::size_t{1} << n, -1);
  for (std::size_t k = 0; k < valid_.size(); ++k) index_[valid_[k]] = static_cast<std::int32_t>(k);
}

void CodecSolver::charge() {
  if (++counters_.evaluations > limits_.budget)
    fail(ErrorKind::kBudgetExhausted, "evaluation budget of " + std::to_string(limits_.budget) + " states exhausted");
}

bool CodecSolver::mover_wins(const GameState& st) {
  if (!codec_.is_valid(st)) fail(ErrorKind::kInvalidPosition, codec_.render(st) + " is not a valid position");
  return evaluate_memo(st);
}

bool CodecSolver::is_winning_first_move(Int a) { return !evaluate_memo(codec_.initial_state(a)); }

const std::vector<std::uint64_t>& CodecSolver::level(Int x) const {
  const Int base = std::max<Int>(codec_.frobenius(), 0) + 1;
  if (x < base || x > highest_level()) fail(ErrorKind::kOutOfWindow, "level " + std::to_string(x) + " not built");
  return levels_[static_cast<std::size_t>(x - base)];
}

bool CodecSolver::level_contains(Int x, std::uint64_t c) const {
  const std::int32_t k = index_[c];
  if (k < 0) fail(ErrorKind::kInternal, "gap set is not down-closed");
  return test_bit(level(x), static_cast<std::size_t>(k));
}

bool CodecSolver::evaluate_memo(const GameState& st) {
  const Int g = codec_.frobenius();
  if (table_mode_ && st.x > g) {
    extend_to(st.x);
    return level_contains(st.x, st.gaps);
  }
  if (auto it = memo_.find(st); it != memo_.end()) return it->second;
  charge();
  bool wins = false;
  for (std::uint64_t rest = st.gaps; rest && !wins; rest &= rest - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(rest));
    wins = !evaluate_memo({st.x, st.gaps & ~codec_.kill(j)});
  }
  const NumericalSemigroup& s = codec_.semigroup();
  for (Int y = st.x - 1; y >= 1 && !wins; --y)
    if (s.contains(y)) wins = !evaluate_memo({y, codec_.lower_move(st.gaps, st.x, y)});
  if (memo_.size() >= limits_.max_memo_entries)
    fail(ErrorKind::kMemoOverflow, "state memo exceeded " + std::to_string(limits_.max_memo_entries) + " entries");
  memo_.emplace(st, wins);
  counters_.memo_states = memo_.size();
  return wins;
}

bool CodecSolver::first_move_wins_below(Int x) {
  // Every first move y <= x must already be decidable: y <= g by memo,
  // y > g by its built level.
  const Int g = codec_.frobenius();
  const std::uint64_t full = codec_.full_mask();
  while (first_moves_cleared_to_ < x) {
    const Int y = ++first_moves_cleared_to_;
    if (!codec_.semigroup().contains(y)) continue;
    const bool winning = y > g ? !level_contains(y, full) : is_winning_first_move(y);
    if (winning && !least_winning_first_move_) least_winning_first_move_ = y;
  }
  return least_winning_first_move_ && *least_winning_first_move_ <= x;
}

void CodecSolver::extend_to(Int x) {
  if (!table_mode_) fail(ErrorKind::kInternal, "W levels requested outside table mode");
  while (highest_level() < x) build_level(highest_level() + 1);
}

void CodecSolver::build_level(Int x) {
  const Int g = codec_.frobenius();
  const NumericalSemigroup& s = codec_.semigroup();
  // A first move y <= x - g - 1 leaves exactly the opening position of y.
  const bool shortcut = first_move_wins_below(std::min(x - 1, x - g - 1));
  std::vector<std::uint64_t> bits((valid_.size() + 63) / 64, 0);
  const std::size_t bytes = bits.size() * sizeof(std::uint64_t);
  if (table_bytes_ + bytes > limits_.max_table_bytes)
    fail(ErrorKind::kBudgetExhausted, "W tables exceeded " + std::to_string(limits_.max_table_bytes) + " bytes");
  const Int lo = std::max<Int>(1, x - g);
  for (std::size_t k = 0; k < valid_.size(); ++k) {
    charge();
    const std::uint64_t c = valid_[k];
    bool wins = shortcut;
    // Moves x + c_j stay on level x with a strictly smaller (already done) set.
    for (std::uint64_t rest = c; rest && !wins; rest &= rest - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(rest));
      wins = !test_bit(bits, static_cast<std::size_t>(index_[c & ~codec_.kill(j)]));
    }
    for (Int y = x - 1; y >= lo && !wins; --y) {
      if (!s.contains(y)) continue;
      const std::uint64_t d = codec_.lower_move(c, x, y);
      wins = y > g ? !level_contains(y, d) : !evaluate_memo({y, d});
    }
    if (wins) bits[k >> 6] |= bit(k & 63);
  }
  levels_.push_back(std::move(bits));
  table_bytes_ += bytes;
  ++counters_.levels;
  counters_.valid_sets = valid_.size();
}

bool is_winning_first_move(const NumericalSemigroup& s, Int a, DeciderLimits limits) {
  if (s.is_naturals()) {
    if (a <= 0) fail(ErrorKind::kInvalidArgument, "first move must be positive");
    return a == 1;
  }
  CodecSolver solver(s, limits, s.gap_count() <= limits.max_table_gaps);
  return solver.is_winning_first_move(a);
}

bool is_winning_first_move_by_poset(const NumericalSemigroup& s, Int a) {
  return !solve(apery_poset(s, a)).mover_wins;
}

std::optional<Int> smallest_winning_move(const NumericalSemigroup& s, Int x_max, DeciderLimits limits) {
  if (s.is_naturals()) return x_max >= 1 ? std::optional<Int>(1) : std::nullopt;
  CodecSolver solver(s, limits, s.gap_count() <= limits.max_table_gaps);
  for (Int a = 1; a <= x_max; ++a)
    if (s.contains(a) && solver.is_winning_first_move(a)) return a;
  return std::nullopt;
}

std::string_view to_string(Winner w) {
  switch (w) {
    case Winner::kA: return "A";
    case Winner::kB: return "B";
    case Winner::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kWinningMove: return "winning-first-move";
    case CertificateKind::kPeriodicity: return "periodicity";
    case CertificateKind::kBudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

namespace {

bool verify_periodicity(CodecSolver& solver, const Verdict& v) {
  const StateCodec& codec = solver.codec();
  for (Int i = 0; i < v.window_length; ++i)
    if (solver.level(v.window_first + i) != solver.level(v.window_second + i)) return false;
  const Int end = v.window_second + v.window_length - 1;
  for (Int a = 1; a <= end; ++a) {
    if (!codec.semigroup().contains(a)) continue;
    const bool winning =
        a > codec.frobenius() ? !solver.level_contains(a, codec.full_mask()) : solver.is_winning_first_move(a);
    if (winning) return false;
  }
  return true;
}

}  // namespace

Verdict decide_winner(const NumericalSemigroup& s, DeciderLimits limits) {
  Verdict v;
  if (s.is_naturals()) {
    v.winner = Winner::kA;
    v.certificate = CertificateKind::kWinningMove;
    v.move = 1;
    v.verified = true;
    return v;
  }
  CodecSolver solver(s, limits, true);
  const Int g = s.frobenius();
  const std::uint64_t full = solver.codec().full_mask();
  auto a_wins = [&](Int a) {
    v.winner = Winner::kA;
    v.certificate = CertificateKind::kWinningMove;
    v.move = a;
    // Independent path: a memo-only solver that never builds level tables.
    try {
      DeciderLimits check = limits;
      CodecSolver fresh(s, check, false);
      v.verified = fresh.is_winning_first_move(a);
    } catch (const Error&) {
      v.verified = false;
    }
  };
  try {
    for (Int a = 1; a <= g; ++a) {
      if (s.contains(a) && solver.is_winning_first_move(a)) {
        a_wins(a);
        v.x_max = solver.highest_level();
        v.counters = solver.counters();
        return v;
      }
    }
    const Int length = g;
    std::vector<std::uint64_t> level_hash;
    std::map<std::uint64_t, std::vector<Int>> windows;
    for (Int x = g + 1;; ++x) {
      solver.extend_to(x);
      if (!solver.level_contains(x, full)) {
        a_wins(x);
        break;
      }
      level_hash.push_back(hash_words(solver.level(x)));
      if (static_cast<Int>(level_hash.size()) < length) continue;
      const Int start = x - length + 1;
      std::uint64_t wh = 0x51afd7ed558ccd1dull;
      for (Int i = start; i <= x; ++i) wh = (wh ^ level_hash[static_cast<std::size_t>(i - g - 1)]) * 0x100000001b3ull;
      auto& starts = windows[wh];
      bool found = false;
      for (Int earlier : starts) {
        bool same = true;
        for (Int i = 0; i < length && same; ++i) same = solver.level(earlier + i) == solver.level(start + i);
        if (same) {
          v.winner = Winner::kB;
          v.certificate = CertificateKind::kPeriodicity;
          v.window_first = earlier;
          v.window_second = start;
          v.window_length = length;
          found = true;
          break;
        }
      }
      if (found) {
        v.verified = verify_periodicity(solver, v);
        break;
      }
      starts.push_back(start);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kBudgetExhausted) throw;
    v = Verdict{};
    v.winner = Winner::kUnknown;
    v.certificate = CertificateKind::kBudgetExhausted;
  }
  v.x_max = solver.highest_level();
  v.counters = solver.counters();
  return v;
}

BigBound power_of_two_bound(const mpz_class& exponent) {
  BigBound b;
  b.exponent = exponent;
  if (exponent <= (1 << 24)) {
    mpz_class value;
    mpz_ui_pow_ui(value.get_mpz_t(), 2, exponent.get_ui());
    b.value = value;
  }
  return b;
}

std::string BigBound::to_string() const { return value ? value->get_str() : "2^" + exponent.get_str(); }

BigBound theoretical_bound(const NumericalSemigroup& s) {
  if (s.is_naturals()) fail(ErrorKind::kUndefinedBound, "the bound is undefined for S = N (A wins with 1)");
  mpz_class exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), 2, s.gap_count());
  exponent *= static_cast<unsigned long>(s.frobenius());
  return power_of_two_bound(exponent);
}

}  // namespace semichomp
