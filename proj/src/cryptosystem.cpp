#include "chaoscheb/cryptosystem.hpp"

#include "chaoscheb/chebyshev.hpp"
#include "fixed.hpp"

namespace chaoscheb {

namespace {

void check_message(const Real& M) {
  if (cmpabs(M.scaled(), M.config().scale()) > 0) throw DomainError("plaintext must satisfy |M| <= 1");
}

void check_public_point(const Real& x) {
  const PrecisionConfig& cfg = x.config();
  if (x.abs() > Real::from_int(1, cfg) - cfg.delta()) throw DomainError("public point must satisfy |x| <= 1 - delta");
}

bool negligible(const Real& v) { return cmpabs(v.scaled(), v.config().epsilon_scaled()) <= 0; }

}  // namespace

std::string to_string(Scheme s) { return s == Scheme::jacobi ? "jacobi" : "chebyshev"; }

Scheme parse_scheme(std::string_view text) {
  if (text == "chebyshev") return Scheme::chebyshev;
  if (text == "jacobi") return Scheme::jacobi;
  throw ParseError("unknown scheme '" + std::string(text) + "'");
}

MapFamily MapFamily::chebyshev() { return MapFamily(Scheme::chebyshev, std::nullopt); }

MapFamily MapFamily::jacobi(Modulus k) { return MapFamily(Scheme::jacobi, std::move(k)); }

const Modulus& MapFamily::modulus() const {
  if (!modulus_) throw DomainError("the Chebyshev family has no modulus");
  return *modulus_;
}

Real MapFamily::eval(const Index& n, const Real& x) const {
  if (is_jacobi()) return jacobi_map(n, x, *modulus_);
  return cheb_halving(n, x);
}

KeyPair keygen(const MapFamily& family, const PrecisionConfig& cfg, SeededRng& rng, const Index& max_index) {
  if (max_index < Index(2)) throw DomainError("max_index must be at least 2");
  Index s = rng.uniform_index(2, max_index);
  Real x = rng.uniform_real(Real::from_int(1, cfg) - cfg.delta());
  return make_keypair(family, x, s);
}

KeyPair make_keypair(const MapFamily& family, const Real& x, const Index& s) {
  if (s < Index(2)) throw DomainError("private index must be at least 2");
  check_public_point(x);
  return KeyPair{PublicKey{family, x, family.eval(s, x)}, PrivateKey{s}};
}

Ciphertext encrypt(const PublicKey& pk, const Real& M, SeededRng& rng, const Index& max_index) {
  check_message(M);
  if (max_index < Index(2)) throw DomainError("max_index must be at least 2");
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Index r = rng.uniform_index(2, max_index);
    Real mask = pk.family.eval(r, pk.y);
    if (negligible(mask)) continue;
    return Ciphertext{pk.family.eval(r, pk.x), M * mask};
  }
  throw PrecisionBreakdown("no usable ephemeral index after " + std::to_string(kRetryCap) + " draws");
}

Ciphertext encrypt_with_index(const PublicKey& pk, const Real& M, const Index& r) {
  check_message(M);
  Real mask = pk.family.eval(r, pk.y);
  if (negligible(mask)) throw PrecisionBreakdown("mask F_r(y) vanishes within epsilon");
  return Ciphertext{pk.family.eval(r, pk.x), M * mask};
}

Real decrypt(const PublicKey& pk, const PrivateKey& sk, const Ciphertext& c) {
  Real mask = pk.family.eval(sk.s, c.u);
  if (negligible(mask)) throw PrecisionBreakdown("mask F_s(u) vanishes within epsilon");
  return c.X / mask;
}

Real phase_point(const MapFamily& family, const mpz_class& p, const mpz_class& q, const PrecisionConfig& cfg) {
  if (sgn(q) <= 0) throw DomainError("phase denominator must be positive");
  long prec = cfg.working_bits(cfg.digits() / 2) + 8;
  detail::Kernel kern(prec);
  if (family.is_jacobi()) {
    detail::EllipticFx e(family.modulus().parameter_fixed(prec), kern);
    mpz_class u = round_half_even(mpz_class(e.period * p), q);
    return detail::fx_to_real(e.cn(u), prec, cfg);
  }
  mpz_class t = round_half_even(mpz_class(kern.two_pi() * p), q);
  return detail::fx_to_real(kern.cos(t), prec, cfg);
}

Real encode_message(const mpz_class& m, const PrecisionConfig& cfg) {
  if (sgn(m) < 0 || cmp(m, cfg.scale()) >= 0) throw DomainError("message integer must lie in [0, B^L)");
  return Real(cfg, m);
}

mpz_class decode_message(const Real& M) {
  if (M.sign() < 0 || cmp(M.scaled(), M.config().scale()) >= 0) {
    throw DomainError("decoded plaintext must lie in [0, 1)");
  }
  return M.scaled();
}

}  // namespace chaoscheb
