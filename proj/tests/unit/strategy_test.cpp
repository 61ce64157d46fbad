#include <doctest.h>

#include "semichomp/families.hpp"
#include "semichomp/strategy.hpp"

using namespace semichomp;

TEST_SUITE("strategy") {
  TEST_CASE("solver strategy is sound for the winning side") {
    auto p = std::make_shared<const FinitePoset>(grid_poset(3, 4));
    SolverStrategy st(p);
    CHECK(verify_strategy(st, p->all(), true).sound);
    // The losing side cannot be made sound.
    auto ten = std::make_shared<const FinitePoset>(ten_element_poset());
    SolverStrategy loser(ten);
    CHECK_FALSE(verify_strategy(loser, ten->all(), true).sound);
    CHECK(verify_strategy(SolverStrategy(ten), ten->all(), false).sound);
  }

  TEST_CASE("pairing hypotheses are checked with witnesses") {
    auto p = std::make_shared<const FinitePoset>(apery_poset(NumericalSemigroup{5, 7, 9}, 5));
    std::vector<std::size_t> identity(p->size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    CHECK(check_pairing(*p, identity).valid);

    std::vector<std::size_t> not_involution = identity;
    not_involution[1] = 2;
    const PairingReport bad = check_pairing(*p, not_involution);
    CHECK_FALSE(bad.valid);
    CHECK(bad.condition == 'a');
    CHECK_THROWS_AS(pairing_strategy(p, not_involution), Error);
  }

  TEST_CASE("arithmetic involution yields a sound strategy") {
    const auto shape = detect_shape(NumericalSemigroup{5, 7, 9});
    REQUIRE(shape);
    const Involution inv = arithmetic_involution(*shape);
    const PairingReport rep = check_pairing(*inv.poset, inv.phi);
    CHECK(rep.valid);
    auto strat = pairing_strategy(inv.poset, inv.phi);
    CHECK_FALSE(strat->mover_wins_fixed_game());
    CHECK(verify_strategy(*strat, inv.poset->all(), false).sound);
  }

  TEST_CASE("semigroup strategy verification reports the failing first move") {
    NumericalSemigroup s{4, 5, 6, 7};
    const SemigroupStrategy b = med_strategy(s, Player::kB);
    CHECK(verify_semigroup_strategy(s, b, 30).sound);
    CHECK_THROWS_AS(med_strategy(s, Player::kA), Error);
  }
}
