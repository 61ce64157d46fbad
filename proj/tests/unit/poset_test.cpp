#include <doctest.h>

#include <map>
#include <sstream>

#include "semichomp/poset.hpp"
#include "semichomp/semigroup.hpp"

using namespace semichomp;

namespace {

// Plain minimax over explicit membership vectors; no shared code with the solver.
bool naive_mover_wins(const std::vector<std::vector<bool>>& leq, std::vector<bool> pos,
                      std::map<std::vector<bool>, bool>& memo) {
  auto it = memo.find(pos);
  if (it != memo.end()) return it->second;
  bool win = false;
  for (std::size_t y = 0; y < pos.size() && !win; ++y) {
    if (!pos[y]) continue;
    std::vector<bool> next = pos;
    for (std::size_t z = 0; z < pos.size(); ++z)
      if (leq[y][z]) next[z] = false;
    bool empty = true;
    for (bool b : next) empty = empty && !b;
    // Taking the minimum empties the board and loses.
    if (!empty && !naive_mover_wins(leq, next, memo)) win = true;
  }
  memo[pos] = win;
  return win;
}

bool naive_mover_wins(const FinitePoset& p) {
  std::vector<std::vector<bool>> leq(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) leq[i][j] = p.leq(i, j);
  std::map<std::vector<bool>, bool> memo;
  return naive_mover_wins(leq, std::vector<bool>(p.size(), true), memo);
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("validation rejects non-orders") {
    std::vector<std::vector<bool>> cyc{{true, true, true}, {false, true, true}, {false, true, true}};
    CHECK_THROWS_AS(FinitePoset({"a", "b", "c"}, cyc), Error);
    std::vector<std::vector<bool>> two_min{{true, false}, {false, true}};
    CHECK_THROWS_AS(FinitePoset({"a", "b"}, two_min), Error);
  }

  TEST_CASE("rectangular chomp: the first player wins") {
    for (std::size_t r = 1; r <= 3; ++r)
      for (std::size_t c = 1; c <= 4; ++c) {
        const FinitePoset g = grid_poset(r, c);
        const bool wins = solve(g).mover_wins;
        CHECK(wins == (r * c > 1));
        CHECK(wins == naive_mover_wins(g));
      }
  }

  TEST_CASE("ten-element poset is a loss for the mover") {
    const FinitePoset p = ten_element_poset();
    CHECK(p.size() == 10);
    CHECK_FALSE(solve(p).mover_wins);
    CHECK_FALSE(naive_mover_wins(p));
  }

  TEST_CASE("solver agrees with naive minimax on Apery posets") {
    for (auto gens : std::vector<std::vector<Int>>{{3, 5}, {4, 5, 6}, {5, 6, 7}, {6, 7, 11}, {4, 6, 7}})
      for (Int a = 1; a <= 12; ++a) {
        NumericalSemigroup s(gens);
        if (!s.contains(a)) continue;
        const FinitePoset p = apery_poset(s, a);
        CHECK(solve(p).mover_wins == naive_mover_wins(p));
      }
  }

  TEST_CASE("a poset with a maximum is a first-player win") {
    const FinitePoset p = apery_poset(NumericalSemigroup{4, 5}, 8);
    const GameOutcome o = solve(p);
    CHECK(o.mover_wins);
    const auto top = p.maximal_elements(p.all());
    REQUIRE(top.size() == 1);
    CHECK(std::find(o.winning_moves.begin(), o.winning_moves.end(), top.front()) != o.winning_moves.end());
  }

  TEST_CASE("text format round trip") {
    const FinitePoset p = apery_poset(NumericalSemigroup{3, 5}, 8);
    std::istringstream in(write_poset(p));
    const FinitePoset q = read_poset(in);
    REQUIRE(q.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        CHECK(p.leq(i, j) == q.leq(*q.index_of(p.label(i)), *q.index_of(p.label(j))));
  }

  TEST_CASE("moves remove up-sets; starts must be down-sets") {
    const FinitePoset p = apery_poset(NumericalSemigroup{3, 5}, 8);
    const ElementSet after = p.after_move(p.all(), *p.index_of_value(9));
    std::vector<Int> left;
    after.for_each([&](std::size_t i) { left.push_back(p.values()[i]); });
    CHECK(left == std::vector<Int>{0, 3, 5, 6, 10});
    CHECK(p.is_down_set(after));
    ElementSet bad(p.size());
    bad.set(*p.index_of_value(15));
    CHECK_THROWS_AS(solve(p, bad), Error);
  }

  TEST_CASE("memo cap raises instead of evicting") {
    const FinitePoset p = grid_poset(4, 6);
    CHECK_THROWS_AS(solve(p, p.all(), SolveLimits{8}), Error);
  }
}
