#include "chaoscheb/rng.hpp"

namespace chaoscheb {

mpz_class SeededRng::below(const mpz_class& n) {
  if (sgn(n) <= 0) throw DomainError("empty sampling range");
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  const size_t words = (bits + 63) / 64;
  const size_t excess = words * 64 - bits;
  for (;;) {
    mpz_class v = 0;
    for (size_t i = 0; i < words; ++i) {
      v <<= 64;
      std::uint64_t w = next();
      if (i == 0 && excess > 0) w >>= excess;
      mpz_class part;
      mpz_import(part.get_mpz_t(), 1, -1, sizeof(w), 0, 0, &w);
      v += part;
    }
    if (cmp(v, n) < 0) return v;
  }
}

Index SeededRng::uniform_index(const Index& lo, const Index& hi) {
  if (hi < lo) throw DomainError("uniform_index needs lo <= hi");
  mpz_class span = hi.value() - lo.value() + 1;
  return Index(mpz_class(lo.value() + below(span)));
}

Real SeededRng::uniform_real(const Real& bound) { return uniform_real(-bound, bound); }

Real SeededRng::uniform_real(const Real& lo, const Real& hi) {
  if (hi < lo) throw DomainError("uniform_real needs lo <= hi");
  mpz_class span = hi.scaled() - lo.scaled() + 1;
  return Real(lo.config(), mpz_class(lo.scaled() + below(span)));
}

}  // namespace chaoscheb
