#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chaoscheb {

// Nonnegative arbitrary-size integer used for map indices (s, r, r', p, q, w).
class Index {
 public:
  Index() = default;
  Index(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  // Throws DomainError when v < 0.
  explicit Index(mpz_class v);

  // Decimal digits only; ParseError otherwise.
  static Index parse(std::string_view text);
  static Index pow2(unsigned long e);

  const mpz_class& value() const { return v_; }
  std::string to_string() const { return v_.get_str(); }

  // Number of binary digits; 0 for zero.
  unsigned long bit_length() const;
  bool bit(unsigned long i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool fits_u64() const;
  std::uint64_t to_u64() const;

  Index pow(unsigned long e) const;

  friend Index operator+(const Index& a, const Index& b) { return Index(mpz_class(a.v_ + b.v_)); }
  friend Index operator*(const Index& a, const Index& b) { return Index(mpz_class(a.v_ * b.v_)); }
  // DomainError if the result would be negative.
  friend Index operator-(const Index& a, const Index& b);

  friend bool operator==(const Index& a, const Index& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_{0};
};

}  // namespace chaoscheb
