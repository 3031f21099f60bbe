#pragma once

// Public-key encryption over a semi-group map family F: the public key is
// (x, F_s(x)), a ciphertext is (F_r(x), M * F_r(F_s(x))).

#include <optional>
#include <string>
#include <string_view>

#include "chaoscheb/elliptic.hpp"
#include "chaoscheb/index.hpp"
#include "chaoscheb/realnum.hpp"
#include "chaoscheb/rng.hpp"

namespace chaoscheb {

enum class Scheme { chebyshev, jacobi };

std::string to_string(Scheme s);
// "chebyshev" or "jacobi"; ParseError otherwise.
Scheme parse_scheme(std::string_view text);

class MapFamily {
 public:
  static MapFamily chebyshev();
  static MapFamily jacobi(Modulus k);

  Scheme scheme() const { return scheme_; }
  bool is_jacobi() const { return scheme_ == Scheme::jacobi; }
  // DomainError for the Chebyshev family.
  const Modulus& modulus() const;

  // T_n(x) by halving, or R_n(x, k).
  Real eval(const Index& n, const Real& x) const;

 private:
  MapFamily(Scheme s, std::optional<Modulus> k) : scheme_(s), modulus_(std::move(k)) {}
  Scheme scheme_;
  std::optional<Modulus> modulus_;
};

struct PublicKey {
  MapFamily family;
  Real x;
  Real y;
};

struct PrivateKey {
  Index s;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

struct Ciphertext {
  Real u;
  Real X;
};

// Resampling budget for degenerate draws.
inline constexpr int kRetryCap = 64;

// s uniform in [2, max_index], x uniform over the L-digit reals with
// |x| <= 1 - delta.
KeyPair keygen(const MapFamily& family, const PrecisionConfig& cfg, SeededRng& rng, const Index& max_index);

// Key pair from given x and s. DomainError when s < 2 or |x| > 1 - delta.
KeyPair make_keypair(const MapFamily& family, const Real& x, const Index& s);

// r uniform in [2, max_index]; redraws r while the mask is within epsilon of
// zero, at most kRetryCap times (then PrecisionBreakdown).
Ciphertext encrypt(const PublicKey& pk, const Real& M, SeededRng& rng, const Index& max_index);

// Encryption with a given r. PrecisionBreakdown when |F_r(y)| <= epsilon.
Ciphertext encrypt_with_index(const PublicKey& pk, const Real& M, const Index& r);

// M = X / F_s(u). PrecisionBreakdown when |F_s(u)| <= epsilon.
Real decrypt(const PublicKey& pk, const PrivateKey& sk, const Ciphertext& c);

// The point at phase p/q of the family's period: cos(2 pi p/q) for
// Chebyshev, cn(4K p/q, k) for Jacobian maps. q > 0.
Real phase_point(const MapFamily& family, const mpz_class& p, const mpz_class& q, const PrecisionConfig& cfg);

// m * B^-L for an integer 0 <= m < B^L.
Real encode_message(const mpz_class& m, const PrecisionConfig& cfg);
// Inverse of encode_message for 0 <= M < 1.
mpz_class decode_message(const Real& M);

}  // namespace chaoscheb
