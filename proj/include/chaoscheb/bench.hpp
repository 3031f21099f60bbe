#pragma once

// Timing of the three Chebyshev evaluators over a grid of (n, L).

#include <string>
#include <vector>

#include "chaoscheb/index.hpp"

namespace chaoscheb {

enum class Evaluator { linear, halving, trig };

std::string to_string(Evaluator e);

struct BenchCell {
  Index n;
  int digits = 0;
  Evaluator evaluator = Evaluator::halving;
  bool skipped = false;  // linear above its limit
  double seconds = 0;    // best per-call time over the repetitions
  // linear: n; halving: descent levels; trig: sin/cos evaluations.
  unsigned long steps = 0;
};

struct BenchOptions {
  std::vector<Index> ns;
  std::vector<int> digits;
  int base = 10;
  int repetitions = 5;
  // Minimum duration of one timed batch.
  double min_batch_seconds = 0.005;
};

std::vector<BenchCell> run_bench(const BenchOptions& opts);

// Whitespace-aligned table, one row per cell.
std::string format_bench(const std::vector<BenchCell>& cells);

struct GrowthCheck {
  bool ok = true;
  double worst_ratio = 0;  // max time(n^2)/time(n) for halving
  int pairs = 0;
};

// Compares halving times for every (n, n^2) pair present at the same L.
GrowthCheck check_halving_growth(const std::vector<BenchCell>& cells, double limit = 2.5);

// time(linear) / time(halving) at the given n and L; 0 when absent.
double linear_halving_ratio(const std::vector<BenchCell>& cells, const Index& n, int digits);

}  // namespace chaoscheb
