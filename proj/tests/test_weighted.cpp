#include <doctest.h>

#include "oracles.hpp"
#include "sgdim/rational_simplex.hpp"
#include "sgdim/weighted.hpp"

using namespace sgdim;

namespace {

kernels::TruthTable as_table(const std::vector<bool>& t) { return {t.begin(), t.end()}; }

}  // namespace

TEST_CASE("exact simplex on small systems") {
  // x + y >= 2, x - y >= 1  ->  feasible
  std::vector<lp::Row> rows{{{1, 1}, 2}, {{1, -1}, 1}};
  auto sol = lp::find_nonnegative_solution(2, rows);
  REQUIRE(sol);
  CHECK((*sol)[0] + (*sol)[1] >= 2);
  CHECK((*sol)[0] - (*sol)[1] >= 1);
  // x >= 1 and -x >= 0 -> infeasible
  rows = {{{1}, 1}, {{-1}, 0}};
  CHECK_FALSE(lp::find_nonnegative_solution(1, rows));
  // x - y >= 1, y - x >= 1 -> infeasible
  rows = {{{1, -1}, 1}, {{-1, 1}, 1}};
  CHECK_FALSE(lp::find_nonnegative_solution(2, rows));
  // trivially satisfied system
  rows = {{{1, 0}, -3}};
  CHECK(lp::find_nonnegative_solution(2, rows));
}

TEST_CASE("weighted game validation") {
  const WeightedGame g(3, {2, 1, 1});
  CHECK(g.is_winning(BitVector::parse("110")));
  CHECK_FALSE(g.is_winning(BitVector::parse("011")));
  CHECK(g.weight_of_mask(0b111) == 4);
  CHECK_THROWS_AS(WeightedGame(0, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(WeightedGame(1, {1, -1}), InvalidInput);
  CHECK_THROWS_AS(WeightedGame(5, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(IntersectionRep({}), InvalidInput);
  CHECK_THROWS_AS(IntersectionRep({WeightedGame(1, {1}), WeightedGame(1, {1, 1})}), InvalidInput);
}

TEST_CASE("feasibility systems") {
  const auto a = BitVector::parse("110");
  const auto b = BitVector::parse("011");
  CHECK_THROWS_AS(FeasibilitySystem(3, {a}, {a}), InvalidInput);
  CHECK_THROWS_AS(FeasibilitySystem(3, {BitVector::parse("11")}, {}), InvalidInput);
  const FeasibilitySystem sys(3, {a}, {b});
  const auto w = feasible_separation(sys);
  REQUIRE(w);
  CHECK(sys.satisfied_by(*w));
  // {1,2} and {3,4} must win while {1,3} and {2,4} lose: a 2-trade, infeasible.
  const FeasibilitySystem trade(4, {BitVector::parse("1100"), BitVector::parse("0011")},
                                {BitVector::parse("1010"), BitVector::parse("0101")});
  CHECK_FALSE(feasible_separation(trade));
  // The grand coalition can never be held below the quota.
  CHECK_FALSE(feasible_separation(FeasibilitySystem(2, {}, {BitVector::full(2)})));
}

TEST_CASE("is_weighted agrees with integer brute force on every game with n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto weighted = oracle::weighted_tables(n, 6);
    const auto games = oracle::all_simple_games(n);
    int count = 0;
    for (const auto& t : games) {
      const auto g = from_truth_table(n, as_table(t));
      const auto w = is_weighted(g);
      CAPTURE(n);
      REQUIRE(w.has_value() == weighted.contains(t));
      if (w) {
        for (std::uint64_t s = 0; s < t.size(); ++s) REQUIRE(w->is_winning(Coalition(n, s)) == t[s]);
        ++count;
      }
    }
    // Monotone threshold functions on n inputs, minus the two constants.
    const int expected[] = {0, 1, 4, 18, 148};
    CHECK(count == expected[n]);
  }
}

TEST_CASE("induced game of an intersection") {
  const IntersectionRep rep({WeightedGame(1, {1, 1, 0, 0}), WeightedGame(1, {0, 0, 1, 1})});
  const auto g = induced_game(rep);
  CHECK(g.minimal_winning().size() == 4);
  CHECK(g.is_winning(BitVector::parse("1010")));
  CHECK_FALSE(g.is_winning(BitVector::parse("1100")));
  CHECK_FALSE(is_weighted(g));
}
