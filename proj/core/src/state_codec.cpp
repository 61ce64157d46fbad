#include "semichomp/state_codec.hpp"

#include <algorithm>
#include <bit>

namespace semichomp {

namespace {
std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }
}  // namespace

StateCodec::StateCodec(NumericalSemigroup s) : s_(std::move(s)), gaps_(s_.gaps()) {
  const std::size_t n = gaps_.size();
  if (n > kMaxGaps)
    fail(ErrorKind::kTableTooLarge, s_.to_string() + " has " + std::to_string(n) + " gaps; the state encoding supports at most 62");
  const Int g = s_.frobenius();
  full_ = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  gap_index_.assign(static_cast<std::size_t>(std::max<Int>(g, 0)) + 1, -1);
  for (std::size_t i = 0; i < n; ++i) gap_index_[static_cast<std::size_t>(gaps_[i])] = static_cast<int>(i);

  kill_.assign(n, 0);
  below_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s_.contains(gaps_[i] - gaps_[j])) {
        kill_[j] |= bit(i);
        below_[i] |= bit(j);
      }

  const Int top = std::max<Int>(g, 0);
  low_.assign(static_cast<std::size_t>(top) + 2, 0);
  for (Int d = 0; d <= top + 1; ++d)
    for (std::size_t i = 0; i < n; ++i)
      if (gaps_[i] < d) low_[static_cast<std::size_t>(d)] |= bit(i);
  in_s_.assign(static_cast<std::size_t>(top) + 1, 0);
  for (Int y = 0; y <= top; ++y)
    for (std::size_t i = 0; i < n; ++i)
      if (s_.contains(y + gaps_[i])) in_s_[static_cast<std::size_t>(y)] |= bit(i);

  chunks_ = (n + 7) / 8;
  shift_.assign(static_cast<std::size_t>(top) * chunks_ * 256, 0);
  for (Int delta = 1; delta <= top; ++delta)
    for (std::size_t chunk = 0; chunk < chunks_; ++chunk)
      for (std::size_t byte = 0; byte < 256; ++byte) {
        std::uint64_t out = 0;
        for (std::size_t b = 0; b < 8; ++b) {
          const std::size_t i = chunk * 8 + b;
          if (i >= n || !((byte >> b) & 1u)) continue;
          const int k = gap_index(gaps_[i] + delta);
          if (k >= 0) out |= bit(static_cast<std::size_t>(k));
        }
        shift_[(static_cast<std::size_t>(delta - 1) * chunks_ + chunk) * 256 + byte] = out;
      }
}

std::uint64_t StateCodec::shift_up(std::uint64_t c, Int delta) const {
  if (delta <= 0 || delta > s_.frobenius()) return 0;
  const std::uint64_t* table = &shift_[static_cast<std::size_t>(delta - 1) * chunks_ * 256];
  std::uint64_t out = 0;
  for (std::size_t chunk = 0; c; ++chunk, c >>= 8) out |= table[chunk * 256 + (c & 0xffu)];
  return out;
}

std::uint64_t StateCodec::lower_move(std::uint64_t c, Int x, Int y) const {
  const Int delta = x - y;
  const Int g = s_.frobenius();
  // y + c_i < x contributes when y + c_i is in S; y + c_i >= x when c_i - delta in C.
  const std::uint64_t low = delta > g ? full_ : low_[static_cast<std::size_t>(delta)];
  const std::uint64_t ins = y > g ? full_ : in_s_[static_cast<std::size_t>(y)];
  return (low & ins) | shift_up(c, delta);
}

std::uint64_t StateCodec::reachable_gaps(Int a) const {
  return a > s_.frobenius() ? full_ : in_s_[static_cast<std::size_t>(a)];
}

GameState StateCodec::initial_state(Int a) const {
  if (a <= 0 || !s_.contains(a))
    fail(ErrorKind::kInvalidArgument, std::to_string(a) + " is not a nonzero element of " + s_.to_string());
  return {a, reachable_gaps(a)};
}

bool StateCodec::is_gap_down_set(std::uint64_t c) const {
  for (std::uint64_t rest = c; rest; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    if ((below_[i] & c) != below_[i]) return false;
  }
  return true;
}

bool StateCodec::is_valid(const GameState& st) const {
  if (st.x <= 0 || !s_.contains(st.x)) return false;
  if (st.gaps & ~full_) return false;
  if ((st.gaps & reachable_gaps(st.x)) != st.gaps) return false;
  // Down-closed: v in P and v - a in S for a minimal generator a forces v - a in P.
  for (std::uint64_t rest = st.gaps; rest; rest &= rest - 1) {
    const Int v = st.x + gaps_[static_cast<std::size_t>(std::countr_zero(rest))];
    for (Int a : s_.minimal_generators())
      if (v - a >= 0 && s_.contains(v - a) && !contains(st, v - a)) return false;
  }
  return true;
}

bool StateCodec::contains(const GameState& st, Int y) const {
  if (y < 0) return false;
  if (y < st.x) return s_.contains(y);
  const int k = gap_index(y - st.x);
  return k >= 0 && ((st.gaps >> k) & 1u);
}

std::vector<Int> StateCodec::elements(const GameState& st) const {
  std::vector<Int> out;
  for (Int v = 0; v < st.x; ++v)
    if (s_.contains(v)) out.push_back(v);
  for (std::uint64_t rest = st.gaps; rest; rest &= rest - 1)
    out.push_back(st.x + gaps_[static_cast<std::size_t>(std::countr_zero(rest))]);
  return out;
}

std::size_t StateCodec::element_count(const GameState& st) const {
  std::size_t below = 0;
  const Int g = s_.frobenius();
  if (st.x > g) {
    below = static_cast<std::size_t>(st.x) - gaps_.size();
  } else {
    for (Int v = 0; v < st.x; ++v) below += s_.contains(v);
  }
  return below + static_cast<std::size_t>(std::popcount(st.gaps));
}

GameState StateCodec::apply_move(const GameState& st, Int y) const {
  if (y == 0) fail(ErrorKind::kIllegalMove, "picking 0 ends the game");
  if (!contains(st, y)) fail(ErrorKind::kIllegalMove, std::to_string(y) + " is not in " + render(st));
  std::vector<Int> rest;
  for (Int v : elements(st))
    if (!s_.contains(v - y)) rest.push_back(v);
  GameState out{std::min(st.x, y), 0};
  for (std::size_t i = 0; i < gaps_.size(); ++i)
    if (std::binary_search(rest.begin(), rest.end(), out.x + gaps_[i])) out.gaps |= bit(i);
#ifndef NDEBUG
  if (auto broken = check_move_laws(st, y, out)) fail(ErrorKind::kInternal, *broken);
#endif
  return out;
}

GameState StateCodec::apply_move_fast(const GameState& st, Int y) const {
  if (y == 0) fail(ErrorKind::kIllegalMove, "picking 0 ends the game");
  if (!contains(st, y)) fail(ErrorKind::kIllegalMove, std::to_string(y) + " is not in " + render(st));
  if (y > st.x) return {st.x, st.gaps & ~kill_[static_cast<std::size_t>(gap_index(y - st.x))]};
  return {y, lower_move(st.gaps, st.x, y)};
}

std::optional<std::string> StateCodec::check_move_laws(const GameState& before, Int y, const GameState& after) const {
  if (after.x != std::min(before.x, y)) return "new base is not min(x, y)";
  if (y > before.x && !((after.gaps & ~before.gaps) == 0 && after.gaps != before.gaps))
    return "move above x did not strictly shrink the gap set";
  const Int g = s_.frobenius();
  if (y > g && y < before.x - g && !(after.x == y && after.gaps == full_))
    return "move far below x did not reset to the full gap set";
  return std::nullopt;
}

GameState StateCodec::translate(const GameState& st, Int delta) const {
  const Int g = s_.frobenius();
  const Int to = checked_add(st.x, delta);
  if (st.x <= g || to <= g)
    fail(ErrorKind::kOutOfWindow, "translation needs both bases above the Frobenius number " + std::to_string(g));
  return {to, st.gaps};
}

GameState StateCodec::encode(const std::vector<Int>& elements) const {
  Int x = 1;
  while (!s_.contains(x) || std::binary_search(elements.begin(), elements.end(), x)) ++x;
  GameState st{x, 0};
  for (std::size_t i = 0; i < gaps_.size(); ++i)
    if (std::binary_search(elements.begin(), elements.end(), x + gaps_[i])) st.gaps |= bit(i);
  if (this->elements(st) != elements) fail(ErrorKind::kInvalidPosition, "element set is not a position of chomp on " + s_.to_string());
  return st;
}

std::string StateCodec::render(const GameState& st) const {
  std::string out = "(" + std::to_string(st.x) + ";";
  bool first = true;
  for (std::uint64_t rest = st.gaps; rest; rest &= rest - 1) {
    out += (first ? " " : ",") + std::to_string(gaps_[static_cast<std::size_t>(std::countr_zero(rest))]);
    first = false;
  }
  return out + ")";
}

}  // namespace semichomp
