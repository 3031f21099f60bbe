#pragma once

// Seeded randomness. The engine is std::mt19937_64, whose output sequence is
// fixed by the standard; ranges are drawn by rejection sampling on raw 64-bit
// words so results do not depend on the standard library implementation.

#include <cstdint>
#include <random>

#include <gmpxx.h>

#include "chaoscheb/index.hpp"
#include "chaoscheb/realnum.hpp"

namespace chaoscheb {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n); n > 0.
  mpz_class below(const mpz_class& n);
  // Uniform in [lo, hi].
  Index uniform_index(const Index& lo, const Index& hi);
  // Uniform over the L-digit reals in [-bound, bound].
  Real uniform_real(const Real& bound);
  // Uniform over the L-digit reals in [lo, hi].
  Real uniform_real(const Real& lo, const Real& hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace chaoscheb
