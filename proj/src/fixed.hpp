#pragma once

// Guarded binary fixed point used behind every transcendental routine.
//
// A value v is held as the integer round(v * 2^P). All operands in one
// computation share P. Nothing here is part of the public API.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "chaoscheb/index.hpp"
#include "chaoscheb/realnum.hpp"

namespace chaoscheb::detail {

mpz_class fx_one(long prec);
// Round-to-nearest (a * b) / 2^prec.
mpz_class fx_mul(const mpz_class& a, const mpz_class& b, long prec);
// (a * 2^prec) / b rounded to nearest; b != 0.
mpz_class fx_div(const mpz_class& a, const mpz_class& b, long prec);
mpz_class fx_sqrt(const mpz_class& a, long prec);
// Rescale between precisions (rounding when narrowing).
mpz_class fx_shift(const mpz_class& a, long from_prec, long to_prec);
mpz_class fx_from_real(const Real& r, long prec);
Real fx_to_real(const mpz_class& a, long prec, const PrecisionConfig& cfg);
mpz_class fx_from_double(double d, long prec);
double fx_to_double(const mpz_class& a, long prec);
mpz_class fx_abs(const mpz_class& a);
// Floor-mod into [0, m).
mpz_class fx_mod(const mpz_class& a, const mpz_class& m);

// Owns the constants (pi) one computation needs at precision P. Objects are
// local to a single top-level call and never shared.
class Kernel {
 public:
  explicit Kernel(long prec);

  long prec() const { return prec_; }
  const mpz_class& one() const { return one_; }
  const mpz_class& pi() const;
  mpz_class two_pi() const { return pi() << 1; }
  mpz_class half_pi() const { return pi() >> 1; }

  mpz_class mul(const mpz_class& a, const mpz_class& b) const { return fx_mul(a, b, prec_); }
  mpz_class div(const mpz_class& a, const mpz_class& b) const { return fx_div(a, b, prec_); }
  mpz_class sqrt(const mpz_class& a) const { return fx_sqrt(a, prec_); }

  void sin_cos(const mpz_class& t, mpz_class& s, mpz_class& c) const;
  mpz_class cos(const mpz_class& t) const;
  mpz_class sin(const mpz_class& t) const;
  // Angle of the vector (x, y) in (-pi, pi]; (0, 0) maps to 0.
  mpz_class atan2(const mpz_class& y, const mpz_class& x) const;
  // Inputs are clamped to [-1, 1].
  mpz_class acos(const mpz_class& v) const;
  mpz_class asin(const mpz_class& v) const;

  // Number of sin_cos evaluations so far.
  unsigned long sin_cos_calls() const { return sin_cos_calls_; }

 private:
  long prec_;
  mpz_class one_;
  // pi at prec_ + kPiExtra bits, computed on first use.
  mutable std::optional<mpz_class> pi_hi_;
  mutable std::optional<mpz_class> pi_;
  mutable unsigned long sin_cos_calls_ = 0;
};

inline constexpr long kPiExtra = 32;

// pi at exactly prec bits via the Gauss-Legendre AGM iteration.
mpz_class fx_pi(long prec);

// Chebyshev kernels (x at prec). `steps` receives the descent level count.
mpz_class cheb_halving_fx(const Index& n, const mpz_class& x, long prec, unsigned long* steps = nullptr);
mpz_class cheb_linear_fx(std::uint64_t n, const mpz_class& x, long prec);
mpz_class cheb_trig_fx(const Index& n, const mpz_class& x, const Kernel& k);

// AGM state in fixed point; a[0], b[0], c[0] are the inputs.
struct AgmFx {
  std::vector<mpz_class> a, b, c;
  int steps() const { return static_cast<int>(a.size()) - 1; }
};
// Iterates until c_n <= stop (a fixed-point threshold) or a[n] == b[n].
AgmFx agm_fx(const mpz_class& a0, const mpz_class& b0, const mpz_class& c0, const mpz_class& stop,
             long prec);

// Elliptic kernels. `m` is the parameter k^2 at prec.
struct EllipticFx {
  explicit EllipticFx(const mpz_class& m, const Kernel& k);
  const Kernel& kern;
  AgmFx agm;
  mpz_class period;  // 4K

  mpz_class quarter_period() const { return period >> 2; }
  void sn_cn(const mpz_class& u, mpz_class& sn, mpz_class& cn) const;
  mpz_class cn(const mpz_class& u) const;
  // Result in [0, 2K].
  mpz_class cn_inverse(const mpz_class& v) const;
  mpz_class jacobi_map(const Index& p, const mpz_class& omega) const;
};

mpz_class jacobi_recurrence_fx(std::uint64_t p, const mpz_class& omega, const mpz_class& m, long prec);

// Bits needed to hold n as an integer multiplier.
long index_bits(const Index& n);

}  // namespace chaoscheb::detail
