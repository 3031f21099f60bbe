#pragma once

#include <string>

#include <gmpxx.h>

#include "chaoscheb/chaoscheb.hpp"

namespace oracle {

using namespace chaoscheb;

inline Real R(const std::string& s, const PrecisionConfig& cfg) { return Real::parse(s, cfg); }

// Exact rational rounded half-even to the config's digits.
inline Real round_q(const mpq_class& q, const PrecisionConfig& cfg) {
  return Real::from_ratio(q.get_num(), q.get_den(), cfg);
}

inline mpq_class to_q(const Real& r) { return mpq_class(r.scaled(), r.config().scale()); }

// cos(t) for rational t by a Taylor series summed exactly until the term
// drops below 2^-bits.
inline mpq_class cos_taylor(const mpq_class& t, unsigned bits) {
  mpq_class sum = 1, term = 1, t2 = t * t;
  mpq_class tiny(1, 1);
  tiny /= mpq_class(mpz_class(1) << bits);
  for (unsigned k = 1;; ++k) {
    term = -term * t2 / ((2 * k - 1) * (2 * k));
    term.canonicalize();
    sum += term;
    if (abs(term) < tiny) break;
  }
  return sum;
}

// T_n(x) exactly for rational x via the three-term recurrence.
inline mpq_class cheb_exact(unsigned n, const mpq_class& x) {
  if (n == 0) return 1;
  mpq_class a = 1, b = x;
  for (unsigned i = 1; i < n; ++i) {
    mpq_class c = 2 * x * b - a;
    a = b;
    b = c;
  }
  return b;
}

// |a - b| <= units * B^-L.
inline bool within_ulps(const Real& a, const Real& b, long units) {
  mpz_class d = a.scaled() - b.scaled();
  return cmpabs(d, static_cast<unsigned long>(units)) <= 0;
}

}  // namespace oracle
