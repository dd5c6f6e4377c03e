#include <gtest/gtest.h>

#include <map>

#include "fabopt/ilp.hpp"
#include "support/fixtures.hpp"
#include "support/lp_reader.hpp"
#include "support/oracle.hpp"

namespace fabopt {
namespace {

using testing::Gen;
using testing::read_lp;
using testing::three_card_instance;

std::map<std::string, int> as_map(const Assignment& asg) {
  std::map<std::string, int> out;
  for (const auto& [name, value] : point_from_assignment(asg)) out[name] = value;
  return out;
}

TEST(IlpModelTest, EmptyHand) {
  const IlpModel m = build_model(Instance());
  EXPECT_TRUE(m.binaries.empty());
  EXPECT_TRUE(m.objective.empty());
  ASSERT_EQ(m.constraints.size(), 1u);
  EXPECT_EQ(m.constraints[0].name, "res");
  EXPECT_EQ(read_lp(export_lp(m)), m);
}

TEST(IlpModelTest, SingleCardExclusivityRow) {
  const std::string lp = export_lp(build_model(Instance({Card{"a", 2, 1, 0, 0}})));
  EXPECT_NE(lp.find("x1 + y1 + z1 = 1"), std::string::npos);
  EXPECT_NE(lp.find(" res: x1 <= 0"), std::string::npos);
}

TEST(IlpModelTest, ThreeCardHalfPenaltyCoefficients) {
  const IlpModel m = build_model(three_card_instance(Lambda(1, 2)));
  EXPECT_EQ(m.objective_scale, 2);
  const std::vector<LinearTerm> expected{{"x1", 6}, {"y1", -2}, {"x2", -1}, {"y2", -1}, {"x3", 3}, {"y3", -3}};
  EXPECT_EQ(m.objective, expected);
  const std::vector<LinearTerm> resource{{"x1", 2}, {"y1", -1}, {"y2", -3}, {"x3", 1}, {"y3", -2}};
  ASSERT_EQ(m.constraints.size(), 4u);
  EXPECT_EQ(m.constraints[3].terms, resource);
  EXPECT_EQ(m.constraints[3].rhs, 0);

  const std::string lp = export_lp(m);
  EXPECT_NE(lp.find(" obj: 6 x1 - 2 y1 - x2 - y2 + 3 x3 - 3 y3\n"), std::string::npos);
  EXPECT_NE(lp.find(" res: 2 x1 - y1 - 3 y2 + x3 - 2 y3 <= 0\n"), std::string::npos);
}

TEST(IlpModelTest, OptimumScoresScaledObjective) {
  const Instance inst = three_card_instance(Lambda(1, 2));
  const IlpModel m = read_lp(export_lp(build_model(inst)));
  const auto point = as_map(Assignment({Role::Attack, Role::Pitch, Role::Attack}));
  EXPECT_TRUE(testing::satisfies(m, point));
  EXPECT_EQ(testing::objective_at(m, point), 8);  // 2 * 4
}

TEST(IlpModelTest, LongRowsWrapAndStillParse) {
  std::vector<Card> cards;
  for (int i = 0; i < 20; ++i) cards.push_back(Card{"c" + std::to_string(i), i % 5, 1 + i % 3, i % 4, i % 6});
  const Instance inst(cards, Lambda(2, 3), 4);
  const IlpModel m = build_model(inst);
  const std::string lp = export_lp(m);
  EXPECT_NE(lp.find("\n   "), std::string::npos);
  EXPECT_EQ(read_lp(lp), m);
}

TEST(IlpModelTest, RoundTripAndPointEvaluation) {
  Gen gen(61);
  for (int round = 0; round < 150; ++round) {
    const Instance inst = gen.instance(10, 9, gen.lambda(5, 3), 6);
    const IlpModel m = build_model(inst);
    EXPECT_EQ(m.binaries.size(), 3 * inst.size());
    EXPECT_EQ(m.constraints.size(), inst.size() + 1);
    const IlpModel parsed = read_lp(export_lp(m));
    ASSERT_EQ(parsed, m);
    for (int k = 0; k < 10; ++k) {
      const Assignment asg = gen.assignment(inst.size());
      const auto point = as_map(asg);
      EXPECT_EQ(testing::satisfies(parsed, point), is_feasible(inst, asg));
      EXPECT_EQ(Rational(testing::objective_at(parsed, point)),
                evaluate(inst, asg) * Rational(parsed.objective_scale));
    }
  }
}

TEST(IlpModelTest, ExportIsDeterministic) {
  const Instance inst = three_card_instance(Lambda(3, 4), 2);
  EXPECT_EQ(export_lp(build_model(inst)), export_lp(build_model(inst)));
}

}  // namespace
}  // namespace fabopt
