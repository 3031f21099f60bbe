#include "chaoscheb/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "chaoscheb/chebyshev.hpp"
#include "fixed.hpp"

namespace chaoscheb {

namespace {

double time_per_call(const std::function<void()>& fn, const BenchOptions& opts) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  fn();
  double once = std::chrono::duration<double>(clock::now() - t0).count();
  long batch = 1;
  if (once < opts.min_batch_seconds) {
    batch = static_cast<long>(opts.min_batch_seconds / std::max(once, 1e-9)) + 1;
  }
  double best = once;
  for (int rep = 0; rep < opts.repetitions; ++rep) {
    auto s = clock::now();
    for (long i = 0; i < batch; ++i) fn();
    double per = std::chrono::duration<double>(clock::now() - s).count() / static_cast<double>(batch);
    best = std::min(best, per);
  }
  return best;
}

unsigned long trig_steps(const Index& n, const Real& x) {
  long prec = x.config().working_bits() + detail::index_bits(n) + 8;
  detail::Kernel k(prec);
  detail::cheb_trig_fx(n, detail::fx_from_real(x, prec), k);
  return k.sin_cos_calls();
}

const BenchCell* find(const std::vector<BenchCell>& cells, const Index& n, int digits, Evaluator e) {
  for (const auto& c : cells) {
    if (c.n == n && c.digits == digits && c.evaluator == e && !c.skipped) return &c;
  }
  return nullptr;
}

}  // namespace

std::string to_string(Evaluator e) {
  switch (e) {
    case Evaluator::linear: return "linear";
    case Evaluator::halving: return "halving";
    default: return "trig";
  }
}

std::vector<BenchCell> run_bench(const BenchOptions& opts) {
  if (opts.ns.empty() || opts.digits.empty()) throw DomainError("bench needs nonempty n and digit ranges");
  std::vector<BenchCell> out;
  for (int L : opts.digits) {
    PrecisionConfig cfg(opts.base, L);
    Real x = Real::from_ratio(3, 10, cfg);
    for (const Index& n : opts.ns) {
      BenchCell lin{n, L, Evaluator::linear};
      if (n > Index(kLinearLimit)) {
        lin.skipped = true;
      } else {
        lin.seconds = time_per_call([&] { cheb_linear(n, x); }, opts);
        lin.steps = n.to_u64();
      }
      out.push_back(lin);

      BenchCell halv{n, L, Evaluator::halving};
      halv.seconds = time_per_call([&] { cheb_halving(n, x); }, opts);
      cheb_halving(n, x, &halv.steps);
      out.push_back(halv);

      BenchCell trig{n, L, Evaluator::trig};
      trig.seconds = time_per_call([&] { cheb_trig(n, x); }, opts);
      trig.steps = trig_steps(n, x);
      out.push_back(trig);
    }
  }
  return out;
}

std::string format_bench(const std::vector<BenchCell>& cells) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %6s %-8s %14s %10s\n", "n", "digits", "method", "seconds", "steps");
  out << line;
  for (const auto& c : cells) {
    std::string n = c.n.to_string();
    if (n.size() > 20) n = "2^" + std::to_string(c.n.bit_length() - 1) + "+";
    if (c.skipped) {
      std::snprintf(line, sizeof line, "%-20s %6d %-8s %14s %10s\n", n.c_str(), c.digits, to_string(c.evaluator).c_str(),
                    "skipped", "-");
    } else {
      std::snprintf(line, sizeof line, "%-20s %6d %-8s %14.9f %10lu\n", n.c_str(), c.digits,
                    to_string(c.evaluator).c_str(), c.seconds, c.steps);
    }
    out << line;
  }
  return out.str();
}

GrowthCheck check_halving_growth(const std::vector<BenchCell>& cells, double limit) {
  GrowthCheck g;
  for (const auto& small : cells) {
    if (small.evaluator != Evaluator::halving || small.n < Index(2)) continue;
    const BenchCell* big = find(cells, small.n * small.n, small.digits, Evaluator::halving);
    if (big == nullptr || small.seconds <= 0) continue;
    double ratio = big->seconds / small.seconds;
    g.worst_ratio = std::max(g.worst_ratio, ratio);
    ++g.pairs;
    if (ratio > limit) g.ok = false;
  }
  return g;
}

double linear_halving_ratio(const std::vector<BenchCell>& cells, const Index& n, int digits) {
  const BenchCell* lin = find(cells, n, digits, Evaluator::linear);
  const BenchCell* halv = find(cells, n, digits, Evaluator::halving);
  if (lin == nullptr || halv == nullptr || halv->seconds <= 0) return 0;
  return lin->seconds / halv->seconds;
}

}  // namespace chaoscheb
