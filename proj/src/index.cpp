#include "chaoscheb/index.hpp"

#include <limits>

#include "chaoscheb/errors.hpp"

namespace chaoscheb {

Index::Index(std::uint64_t v) {
  mpz_import(v_.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
}

Index::Index(mpz_class v) : v_(std::move(v)) {
  if (sgn(v_) < 0) throw DomainError("index must be nonnegative");
}

Index Index::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty index");
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw ParseError("index '" + std::string(text) + "' is not a decimal integer");
  }
  return Index(mpz_class(std::string(text), 10));
}

Index Index::pow2(unsigned long e) {
  mpz_class v;
  mpz_setbit(v.get_mpz_t(), e);
  return Index(v);
}

unsigned long Index::bit_length() const {
  if (sgn(v_) == 0) return 0;
  return static_cast<unsigned long>(mpz_sizeinbase(v_.get_mpz_t(), 2));
}

bool Index::fits_u64() const { return bit_length() <= 64; }

std::uint64_t Index::to_u64() const {
  if (!fits_u64()) throw DomainError("index does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v_.get_mpz_t());
  return out;
}

Index Index::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return Index(r);
}

Index operator-(const Index& a, const Index& b) { return Index(mpz_class(a.v_ - b.v_)); }

}  // namespace chaoscheb
