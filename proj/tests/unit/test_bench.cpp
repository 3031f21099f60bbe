#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace chaoscheb;

namespace {

TEST(Bench, GridAndSteps) {
  BenchOptions o;
  o.ns = {1000, 1000000, Index::pow2(40)};
  o.digits = {32};
  o.repetitions = 2;
  o.min_batch_seconds = 0.001;
  std::vector<BenchCell> cells = run_bench(o);
  ASSERT_EQ(cells.size(), 9u);
  for (const auto& c : cells) {
    if (c.evaluator == Evaluator::linear && c.n > Index(kLinearLimit)) {
      EXPECT_TRUE(c.skipped);
      continue;
    }
    EXPECT_FALSE(c.skipped);
    EXPECT_GT(c.seconds, 0);
    if (c.evaluator == Evaluator::halving) EXPECT_EQ(c.steps, c.n.bit_length());
    if (c.evaluator == Evaluator::linear) EXPECT_EQ(Index(c.steps), c.n);
  }
  std::string table = format_bench(cells);
  EXPECT_NE(table.find("halving"), std::string::npos);
  EXPECT_NE(table.find("skipped"), std::string::npos);
  EXPECT_GT(linear_halving_ratio(cells, 1000000, 32), 10.0);
  GrowthCheck g = check_halving_growth(cells);
  EXPECT_EQ(g.pairs, 1);
  EXPECT_TRUE(g.ok) << g.worst_ratio;
}

TEST(Bench, Names) {
  EXPECT_EQ(to_string(Evaluator::linear), "linear");
  EXPECT_EQ(to_string(Evaluator::trig), "trig");
}

}  // namespace
