#include <gtest/gtest.h>

#include "fabopt/errors.hpp"
#include "fabopt/reduction.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace fabopt {
namespace {

using testing::enumerate_knapsack;
using testing::Gen;
using testing::two_item_knapsack;

TEST(KpToFabTest, EmptyKnapsackGivesOnlyCapacityCard) {
  const Instance inst = kp_to_fab(KnapsackInstance{{}, 0});
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst.card(0), (Card{"Energy Potion", 0, 0, 0, 0}));
}

TEST(KpToFabTest, TwoItemMapping) {
  const Instance inst = kp_to_fab(two_item_knapsack(4));
  ASSERT_EQ(inst.size(), 3u);
  const auto attrs = [](const Card& c) { return std::array{c.attack, c.pitch_cost, c.pitch_resource, c.defense}; };
  EXPECT_EQ(attrs(inst.card(0)), (std::array<std::int64_t, 4>{6, 4, 0, 0}));
  EXPECT_EQ(attrs(inst.card(1)), (std::array<std::int64_t, 4>{5, 3, 0, 0}));
  EXPECT_EQ(attrs(inst.card(2)), (std::array<std::int64_t, 4>{0, 0, 4, 0}));
  EXPECT_EQ(inst.card(2).name, kCapacityCardName);
  EXPECT_EQ(inst.lambda(), Lambda::aggro());
  EXPECT_EQ(inst.initial_resources(), 0);
}

TEST(KpToFabTest, PoolEncodingUsesInitialResources) {
  const Instance inst = kp_to_fab(two_item_knapsack(4), CapacityEncoding::InitialResources);
  EXPECT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst.initial_resources(), 4);
}

TEST(KpToFabTest, CardCountIsItemsPlusOne) {
  Gen gen(41);
  for (int round = 0; round < 50; ++round) {
    const KnapsackInstance kp = gen.knapsack(12, 20);
    EXPECT_EQ(kp_to_fab(kp).size(), kp.items.size() + 1);
  }
}

TEST(KpToFabTest, RejectsNegativeData) {
  EXPECT_THROW(kp_to_fab(KnapsackInstance{{{1, -1}}, 3}), ValidationError);
  EXPECT_THROW(kp_to_fab(KnapsackInstance{{}, -2}), ValidationError);
}

TEST(KpToFabTest, DistinctKnapsacksGiveDistinctHands) {
  const auto strip = [](const Instance& inst) {
    std::vector<std::array<std::int64_t, 4>> out;
    for (const Card& c : inst.cards()) out.push_back({c.attack, c.pitch_cost, c.pitch_resource, c.defense});
    return std::pair{out, inst.initial_resources()};
  };
  Gen gen(42);
  for (int round = 0; round < 200; ++round) {
    const KnapsackInstance a = gen.knapsack(4, 3);
    const KnapsackInstance b = gen.knapsack(4, 3);
    if (a == b) continue;
    EXPECT_NE(strip(kp_to_fab(a)), strip(kp_to_fab(b)));
  }
}

TEST(FabToKpTest, AllDefendMapsToEmptySelection) {
  const KnapsackInstance kp = two_item_knapsack(4);
  const Solution s = make_solution(kp_to_fab(kp), Assignment::all(3, Role::Defend), "manual");
  const KnapsackSolution ks = fab_to_kp_solution(kp, s);
  EXPECT_TRUE(ks.selected.empty());
  EXPECT_EQ(ks.total_value, 0);
}

TEST(FabToKpTest, CapacityCardAttackingIsDropped) {
  const KnapsackInstance kp = two_item_knapsack(4);
  const Solution s = make_solution(kp_to_fab(kp), Assignment({Role::Defend, Role::Defend, Role::Attack}), "manual");
  const KnapsackSolution ks = fab_to_kp_solution(kp, s);
  EXPECT_TRUE(ks.selected.empty());
  EXPECT_EQ(ks.total_value, 0);
}

TEST(FabToKpTest, OptimumMapsBack) {
  const KnapsackInstance kp = two_item_knapsack(4);
  const SolverReport r = solve(kp_to_fab(kp), SolverKind::BruteForce);
  const KnapsackSolution ks = fab_to_kp_solution(kp, r.solution);
  EXPECT_EQ(ks.selected, std::vector<std::size_t>{0});
  EXPECT_EQ(ks.total_value, 6);
  EXPECT_EQ(Rational(ks.total_value), r.solution.objective);
  EXPECT_EQ(enumerate_knapsack(kp), 6);
}

TEST(FabToKpTest, RejectsShapeMismatchAndInfeasible) {
  const KnapsackInstance kp = two_item_knapsack(4);
  Solution bad;
  bad.assignment = Assignment::all(5, Role::Defend);
  EXPECT_THROW(fab_to_kp_solution(kp, bad), ContractViolation);
  Solution over;
  over.assignment = Assignment({Role::Attack, Role::Attack, Role::Pitch});
  EXPECT_THROW(fab_to_kp_solution(kp, over), ContractViolation);
}

TEST(KnapsackDpTest, SmallExamples) {
  EXPECT_EQ(solve_knapsack_dp(KnapsackInstance{{}, 10}).total_value, 0);
  EXPECT_EQ(solve_knapsack_dp(two_item_knapsack(4)).total_value, 6);
  const KnapsackSolution both = solve_knapsack_dp(two_item_knapsack(7));
  EXPECT_EQ(both.total_value, 11);
  EXPECT_EQ(both.selected, (std::vector<std::size_t>{0, 1}));
}

TEST(KnapsackDpTest, RefusesAboveCap) {
  EXPECT_THROW(solve_knapsack_dp(KnapsackInstance{{{1, 100}, {1, 100}}, 150}, {.max_cells = 10}), RefusalError);
}

TEST(KnapsackDpTest, MatchesSubsetEnumeration) {
  Gen gen(43);
  for (int round = 0; round < 300; ++round) {
    const KnapsackInstance kp = gen.knapsack(12, 20);
    const KnapsackSolution s = solve_knapsack_dp(kp);
    EXPECT_EQ(s.total_value, enumerate_knapsack(kp));
    std::int64_t w = 0, v = 0;
    for (std::size_t j : s.selected) {
      w += kp.items[j].weight;
      v += kp.items[j].value;
    }
    EXPECT_LE(w, kp.capacity);
    EXPECT_EQ(v, s.total_value);
  }
}

TEST(VerifyReductionTest, Examples) {
  EXPECT_TRUE(verify_reduction(KnapsackInstance{}));
  EXPECT_TRUE(verify_reduction(two_item_knapsack(4)));
  const ReductionCheck check = check_reduction(two_item_knapsack(4));
  EXPECT_EQ(check.knapsack_optimum, 6);
  EXPECT_EQ(check.fab_optimum, Rational(6));
}

TEST(VerifyReductionTest, RandomKnapsacksEverySolverAndEncoding) {
  Gen gen(44);
  for (int round = 0; round < 200; ++round) {
    const KnapsackInstance kp = gen.knapsack(12, 20);
    EXPECT_TRUE(verify_reduction(kp, SolverKind::DynamicProgramming));
    EXPECT_TRUE(verify_reduction(kp, SolverKind::BranchAndBound));
    EXPECT_TRUE(verify_reduction(kp, SolverKind::DynamicProgramming, CapacityEncoding::InitialResources));
    if (kp.items.size() <= 9) {
      EXPECT_TRUE(verify_reduction(kp, SolverKind::BruteForce));
    }
  }
}

TEST(VerifyReductionTest, EncodingsAgreeAndPenaltyIsIrrelevant) {
  Gen gen(45);
  for (int round = 0; round < 100; ++round) {
    const KnapsackInstance kp = gen.knapsack(10, 20);
    const Instance card = kp_to_fab(kp, CapacityEncoding::Card);
    const Instance pool = kp_to_fab(kp, CapacityEncoding::InitialResources);
    const Rational aggro = solve_dp(card).solution.objective;
    EXPECT_EQ(solve_dp(pool).solution.objective, aggro);
    EXPECT_EQ(solve_dp(card.with_lambda(Lambda(1))).solution.objective, aggro);
    EXPECT_EQ(solve_dp(card.with_lambda(Lambda(7, 3))).solution.objective, aggro);
  }
}

TEST(VerifyReductionTest, SolverRefusalPropagates) {
  KnapsackInstance kp;
  for (int j = 0; j < 17; ++j) kp.items.push_back({1, 1});
  kp.capacity = 5;
  EXPECT_THROW(verify_reduction(kp, SolverKind::BruteForce), RefusalError);
}

}  // namespace
}  // namespace fabopt
