#pragma once

// Fixed-precision signed reals in base B with L fractional digits.
//
// A Real is stored as an exact integer mantissa m with value m * B^-L. All
// arithmetic is exact integer arithmetic on mantissas followed by a single
// round-half-to-even back to L digits. Transcendental functions evaluate at
// L + guard digits (plus whatever the argument magnitude costs) and round
// once.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "chaoscheb/errors.hpp"

namespace chaoscheb {

inline int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
inline int cmpabs(const mpz_class& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

class Real;

class PrecisionConfig {
 public:
  static constexpr int kDefaultGuard = 16;

  // epsilon defaults to B^-(L-2) (B^-1 when L < 3).
  explicit PrecisionConfig(int base = 10, int digits = 32, int guard = kDefaultGuard);

  // Same base/digits/guard with epsilon = B^-max(1, floor(L/2)). This is the
  // tolerance for comparing values that went through maps applied to
  // published (already rounded) L-digit values; see README.
  static PrecisionConfig protocol(int base, int digits, int guard = kDefaultGuard);

  // Copy with a different comparison tolerance, given as B^-exponent.
  PrecisionConfig with_epsilon_exponent(int exponent) const;
  // Copy with an arbitrary tolerance; 0 < eps < 1 is required.
  PrecisionConfig with_epsilon(const Real& eps) const;

  int base() const { return data_->base; }
  int digits() const { return data_->digits; }
  int guard() const { return data_->guard; }

  // B^L.
  const mpz_class& scale() const { return data_->scale; }
  const mpz_class& epsilon_scaled() const { return data_->epsilon; }
  Real epsilon() const;
  // Boundary band for public points: |x| <= 1 - delta.
  Real delta() const;

  // Bits of binary fixed point that cover L + guard + extra_digits base-B digits.
  long working_bits(long extra_digits = 0) const;

  friend bool operator==(const PrecisionConfig& a, const PrecisionConfig& b);

 private:
  struct Data {
    int base;
    int digits;
    int guard;
    mpz_class scale;
    mpz_class epsilon;
  };
  explicit PrecisionConfig(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

class Real {
 public:
  // Zero under cfg.
  explicit Real(PrecisionConfig cfg);
  Real(PrecisionConfig cfg, mpz_class scaled);

  static Real from_int(long v, const PrecisionConfig& cfg);
  // p / q rounded half-to-even; q != 0.
  static Real from_ratio(const mpz_class& p, const mpz_class& q, const PrecisionConfig& cfg);

  // Accepts an optional sign, base-B digits, and an optional fraction of any
  // length (rounded half-to-even to L digits). Digits above 9 use a-z.
  static Real parse(std::string_view text, const PrecisionConfig& cfg);
  // Canonical form only: exactly L fractional digits. Used by file readers.
  static Real parse_canonical(std::string_view text, const PrecisionConfig& cfg);

  // Canonical string: optional '-', integer digits, '.', exactly L digits.
  std::string to_string() const;
  // Rounded into another configuration (any base/digits).
  Real rescale(const PrecisionConfig& target) const;
  double to_double() const;

  const PrecisionConfig& config() const { return cfg_; }
  const mpz_class& scaled() const { return m_; }
  int sign() const { return sgn(m_); }
  bool is_zero() const { return sgn(m_) == 0; }

  Real operator-() const;
  Real abs() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  // Throws DegenerateInput on division by zero.
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b);
  friend std::strong_ordering operator<=>(const Real& a, const Real& b);

 private:
  PrecisionConfig cfg_;
  mpz_class m_;
};

Real add(const Real& a, const Real& b);
Real mul(const Real& a, const Real& b);
Real div(const Real& a, const Real& b);
Real neg(const Real& a);
Real abs(const Real& a);
int compare(const Real& a, const Real& b);

// |a - b| <= a.config().epsilon()
bool approx_equal(const Real& a, const Real& b);

Real pi(const PrecisionConfig& cfg);
Real cos(const Real& theta);
Real sin(const Real& theta);
// Principal value in [0, pi]; DomainError when |v| > 1.
Real arccos(const Real& v);
// DomainError for negative input.
Real sqrt(const Real& v);

// round((a mod 1) * B^digits) reduced into [0, B^digits). The default uses
// the value's own digit count.
mpz_class frac_scaled(const Real& a);
mpz_class frac_scaled(const Real& a, int digits);

// Integer power B^e.
mpz_class ipow(int base, unsigned long e);

// p/q rounded to nearest, ties to even; q > 0.
mpz_class round_half_even(const mpz_class& p, const mpz_class& q);

}  // namespace chaoscheb
