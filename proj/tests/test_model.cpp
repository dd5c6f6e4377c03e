#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fabopt/errors.hpp"
#include "fabopt/model.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace fabopt {
namespace {

using testing::Gen;
using testing::three_card_instance;

constexpr Role A = Role::Attack;
constexpr Role P = Role::Pitch;
constexpr Role D = Role::Defend;

TEST(RationalTest, NormalisesAndCompares) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).num(), -1);
  EXPECT_EQ(Rational(3, -6).den(), 2);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational::parse(" 6/4 "), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-5"), Rational(-5));
  EXPECT_EQ(Rational(7, 2).to_string(), "7/2");
  EXPECT_EQ(Rational(8, 2).to_string(), "4");
  EXPECT_THROW(Rational::parse("1/x"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational(1, 0), ContractViolation);
}

TEST(LambdaTest, StoredInLowestTerms) {
  const Lambda l(2, 4);
  EXPECT_EQ(l.num(), 1);
  EXPECT_EQ(l.den(), 2);
  EXPECT_EQ(Lambda::parse("3/9"), Lambda(1, 3));
  EXPECT_EQ(Lambda::parse("0"), Lambda::aggro());
}

TEST(LambdaTest, RejectsInvalidValues) {
  EXPECT_THROW(Lambda(1, 0), ValidationError);
  EXPECT_THROW(Lambda(-1, 2), ValidationError);
  EXPECT_THROW(Lambda::parse("1/0"), ValidationError);
  EXPECT_THROW(Lambda::parse("-1/2"), ValidationError);
  EXPECT_THROW(Lambda::parse("half"), ParseError);
}

TEST(CardTest, ValidationNamesTheField) {
  Card c{"Bolt", 3, -1, 0, 0};
  try {
    validate_card(c, "cards[0]");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "cards[0].pitch_cost");
  }
  EXPECT_THROW(validate_card(Card{"   ", 0, 0, 0, 0}), ValidationError);
  EXPECT_THROW(Instance({Card{"ok", 1, 1, 1, 1}}, Lambda(), -1), ValidationError);
}

TEST(FeasibilityTest, EmptyInstanceIsFeasible) {
  EXPECT_TRUE(is_feasible(Instance(), Assignment()));
}

TEST(FeasibilityTest, UnpaidAttackIsInfeasible) {
  const Instance inst({Card{"a", 5, 2, 1, 0}});
  EXPECT_FALSE(is_feasible(inst, Assignment({A})));
}

TEST(FeasibilityTest, PitchPaysForAttack) {
  const Instance inst({Card{"a", 5, 2, 1, 0}, Card{"b", 0, 0, 3, 1}});
  EXPECT_TRUE(is_feasible(inst, Assignment({A, P})));
}

TEST(FeasibilityTest, InitialPoolCounts) {
  const Instance inst({Card{"a", 5, 2, 1, 0}}, Lambda(), 2);
  EXPECT_TRUE(is_feasible(inst, Assignment({A})));
}

TEST(FeasibilityTest, LengthMismatchNamesBothLengths) {
  const Instance inst({Card{"a", 5, 2, 1, 0}});
  try {
    is_feasible(inst, Assignment({A, D}));
    FAIL() << "expected ContractViolation";
  } catch (const ContractViolation& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find('2'), std::string::npos);
    EXPECT_NE(msg.find('1'), std::string::npos);
  }
  EXPECT_THROW(evaluate(inst, Assignment()), ContractViolation);
  EXPECT_THROW(compute_totals(inst, Assignment()), ContractViolation);
}

TEST(EvaluateTest, AllDefendScoresZero) {
  const Instance inst = three_card_instance(Lambda(0));
  EXPECT_EQ(evaluate(inst, Assignment::all(3, D)), Rational(0));
}

TEST(EvaluateTest, MidrangeSingleCard) {
  const Instance inst({Card{"a", 4, 0, 0, 3}}, Lambda(1));
  EXPECT_EQ(evaluate(inst, Assignment({A})), Rational(1));
}

TEST(EvaluateTest, HalfPenaltyThreeCards) {
  // 7 - (1/2)(2 + 1 + 3) = 4
  const Instance inst = three_card_instance(Lambda(1, 2));
  EXPECT_EQ(evaluate(inst, Assignment({A, P, A})), Rational(4));
}

TEST(EvaluateTest, DefinedOnInfeasibleAssignments) {
  const Instance inst = three_card_instance(Lambda(1));
  const Assignment all_attack = Assignment::all(3, A);
  EXPECT_FALSE(is_feasible(inst, all_attack));
  EXPECT_EQ(evaluate(inst, all_attack), Rational(7 - 6));
}

TEST(TotalsTest, EmptyInstanceIsAllZero) { EXPECT_EQ(compute_totals(Instance(), Assignment()), Totals{}); }

TEST(TotalsTest, ThreeCardExample) {
  const Totals t = compute_totals(three_card_instance(Lambda(0)), Assignment({A, P, A}));
  EXPECT_EQ(t.attack_total, 7);
  EXPECT_EQ(t.pitch_cost_total, 3);
  EXPECT_EQ(t.resources_generated, 3);
  EXPECT_EQ(t.defense_retained, 0);
  EXPECT_EQ(t.defense_lost, 6);
}

TEST(TotalsTest, SingleDefender) {
  const Totals t = compute_totals(Instance({Card{"a", 2, 1, 1, 5}}), Assignment({D}));
  EXPECT_EQ(t, (Totals{0, 0, 0, 5, 0}));
}

TEST(TotalsTest, MatchesIndependentFold) {
  Gen gen(7);
  for (int round = 0; round < 200; ++round) {
    const Instance inst = gen.instance(8, 9, Lambda(0));
    const Assignment asg = gen.assignment(inst.size());
    const Totals t = compute_totals(inst, asg);
    std::int64_t a = 0, cost = 0, res = 0, kept = 0, lost = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const Card& c = inst.card(i);
      a += asg[i] == A ? c.attack : 0;
      cost += asg[i] == A ? c.pitch_cost : 0;
      res += asg[i] == P ? c.pitch_resource : 0;
      kept += asg[i] == D ? c.defense : 0;
      lost += asg[i] != D ? c.defense : 0;
    }
    EXPECT_EQ(t, (Totals{a, cost, res, kept, lost}));
  }
}

// Properties over random hands and assignments.

TEST(ModelPropertyTest, DefensePartitionIdentity) {
  Gen gen(11);
  for (int round = 0; round < 300; ++round) {
    const Instance inst = gen.instance(10, 9, gen.lambda());
    const Totals t = compute_totals(inst, gen.assignment(inst.size()));
    std::int64_t hand = 0;
    for (const Card& c : inst.cards()) hand += c.defense;
    EXPECT_EQ(t.defense_retained + t.defense_lost, hand);
  }
}

TEST(ModelPropertyTest, AggroObjectiveIsAttackTotal) {
  Gen gen(12);
  for (int round = 0; round < 300; ++round) {
    const Instance inst = gen.instance(10, 9, Lambda::aggro());
    const Assignment asg = gen.assignment(inst.size());
    const Rational z = evaluate(inst, asg);
    EXPECT_TRUE(z.is_integer());
    EXPECT_EQ(z, Rational(compute_totals(inst, asg).attack_total));
  }
}

TEST(ModelPropertyTest, InvariantUnderJointPermutation) {
  Gen gen(13);
  for (int round = 0; round < 200; ++round) {
    const Instance inst = gen.instance(9, 9, gen.lambda(), 5);
    const Assignment asg = gen.assignment(inst.size());
    std::vector<std::size_t> perm(inst.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    std::vector<Card> cards;
    std::vector<Role> roles;
    for (std::size_t k : perm) {
      cards.push_back(inst.card(k));
      roles.push_back(asg[k]);
    }
    const Instance permuted(cards, inst.lambda(), inst.initial_resources());
    EXPECT_EQ(evaluate(permuted, Assignment(roles)), evaluate(inst, asg));
    EXPECT_EQ(is_feasible(permuted, Assignment(roles)), is_feasible(inst, asg));
  }
}

TEST(ModelPropertyTest, ObjectiveMonotoneInLambda) {
  Gen gen(14);
  for (int round = 0; round < 300; ++round) {
    const Instance base = gen.instance(8, 9, Lambda(0));
    const Assignment asg = gen.assignment(base.size());
    Lambda l1 = gen.lambda(), l2 = gen.lambda();
    if (l2 < l1) std::swap(l1, l2);
    const Rational z1 = evaluate(base.with_lambda(l1), asg);
    const Rational z2 = evaluate(base.with_lambda(l2), asg);
    if (compute_totals(base, asg).defense_lost == 0 || l1 == l2) {
      EXPECT_EQ(z1, z2);
    } else {
      EXPECT_GT(z1, z2);
    }
  }
}

TEST(SolutionTest, MakeSolutionRejectsInfeasible) {
  const Instance inst({Card{"a", 5, 2, 1, 0}});
  EXPECT_THROW(make_solution(inst, Assignment({A}), "x"), ContractViolation);
  const Solution s = make_solution(inst, Assignment({D}), "x");
  EXPECT_EQ(s.objective, Rational(0));
  EXPECT_EQ(s.solver_name, "x");
}

TEST(RoleTest, ParseAndPrint) {
  EXPECT_EQ(parse_role("ATTACK"), A);
  EXPECT_EQ(parse_role("pitch"), P);
  EXPECT_EQ(to_string(D), "Defend");
  EXPECT_THROW(parse_role("block"), ParseError);
  EXPECT_LT(Assignment({A, D}), Assignment({P, A}));
}

}  // namespace
}  // namespace fabopt
