#pragma once

// Chebyshev polynomials of the first kind, T_n(x).

#include "chaoscheb/index.hpp"
#include "chaoscheb/realnum.hpp"

namespace chaoscheb {

// Largest n accepted by cheb_linear.
inline constexpr std::uint64_t kLinearLimit = 1000000;

// T_n = 2x T_{n-1} - T_{n-2}. O(n); DomainError above kLinearLimit.
Real cheb_linear(const Index& n, const Real& x);

// Pair descent over the bits of n, most significant first. `steps`, when
// given, receives the number of descent levels (the bit length of n).
Real cheb_halving(const Index& n, const Real& x, unsigned long* steps = nullptr);

// cos(n * arccos(x)); DomainError when |x| > 1.
Real cheb_trig(const Index& n, const Real& x);

// T_{rs}(x) after checking it against T_r(T_s(x)) and T_s(T_r(x)). The inner
// values stay at guarded precision. PrecisionBreakdown when r*s exceeds
// max_index or the three values disagree by more than epsilon.
Real semigroup_check(const Index& r, const Index& s, const Real& x, const Index& max_index);

// 2^floor(970 * bits / 2048) where bits = L * log2(B).
Index default_max_index(const PrecisionConfig& cfg);

}  // namespace chaoscheb
