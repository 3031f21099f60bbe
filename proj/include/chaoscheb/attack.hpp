#pragma once

// Index recovery for semi-group maps from a single (x, F_r(x)) pair.
//
// With theta the angle function of the family (arccos, or cn^-1 for the
// Jacobian maps) and P its period (2 pi, or 4K), every index r with
// F_r(x) = y is of the form r = +-a + k b where a = theta(y)/theta(x) and
// b = P/theta(x). Scaling the fractional parts to integers a', b' modulo
// M = B^L turns integrality of +-a + k b into the congruence b' k = -+a'.

#include <cstddef>
#include <optional>
#include <vector>

#include "chaoscheb/cryptosystem.hpp"
#include "chaoscheb/errors.hpp"
#include "chaoscheb/index.hpp"
#include "chaoscheb/realnum.hpp"

namespace chaoscheb {

class AttackFailed : public Error {
 public:
  AttackFailed(const std::string& what, std::optional<Real> best_residual)
      : Error(what), best_residual_(std::move(best_residual)) {}
  const std::optional<Real>& best_residual() const { return best_residual_; }

 private:
  std::optional<Real> best_residual_;
};

// Solutions {x0 + j * modulus/d : 0 <= j < d} of b k = a (mod modulus).
struct CongruenceSolution {
  mpz_class modulus;
  mpz_class d;
  mpz_class x0;

  mpz_class step() const { return modulus / d; }
  mpz_class at(const mpz_class& j) const { return x0 + j * step(); }
  // Ascending; at most `cap` entries.
  std::vector<mpz_class> all(std::size_t cap = 1u << 20) const;
};

// Extended Euclid: d = gcd(b, modulus) = b s' + modulus t', x0 = s' a / d
// reduced into [0, modulus/d). NoSolution when d does not divide a.
CongruenceSolution solve_congruence(const mpz_class& b_prime, const mpz_class& a_prime, const mpz_class& modulus);

// Smallest k >= 0 with (a k + c) mod m in [lo, hi], where 0 <= lo <= hi < m.
std::optional<mpz_class> first_hit(const mpz_class& a, const mpz_class& c, const mpz_class& m, const mpz_class& lo,
                                   const mpz_class& hi);

enum class Branch { plus, minus };

std::string to_string(Branch b);

struct AttackParams {
  Real a;  // at the congruence digit count
  Real b;
  mpz_class a_prime;
  mpz_class b_prime;
  mpz_class modulus;  // B^digits
};

enum class BranchChoice { both, plus_only, minus_only };

struct AttackOptions {
  // Digits used for a', b' and the modulus; 0 means the digit count of x.
  int congruence_digits = 0;
  // Upper bound assumed for the secret index; defaults to default_max_index.
  std::optional<Index> max_index;
  std::size_t candidate_cap = 10000;
  BranchChoice branches = BranchChoice::both;
  // When no exact-congruence candidate verifies, search for k with
  // b' k +- a' within the accumulated rounding error of 0 (mod M).
  bool windowed_fallback = true;
};

enum class Method { congruence, direct_scan, windowed };

std::string to_string(Method m);

struct RecoveredIndex {
  Index r_prime;
  Branch branch;
  mpz_class k_used;
  Real residual;  // |F_r'(x) - y|
  Method method;
  AttackParams params;
  // Exact congruence solutions, first entries only. The minus list is
  // M - k for each plus solution k, in the same order.
  std::vector<mpz_class> plus_solutions;
  std::vector<mpz_class> minus_solutions;
  std::size_t candidates_tried = 0;
};

struct IndexCandidate {
  Index r_prime;
  Branch branch;
  mpz_class k;
};

AttackParams attack_params(const MapFamily& family, const Real& x, const Real& y, const AttackOptions& opts = {});

// First candidate r' with |F_r'(x) - y| <= epsilon. AttackFailed otherwise.
RecoveredIndex recover_index(const MapFamily& family, const Real& x, const Real& y, const AttackOptions& opts = {});

// Every r' <= bound of the form +-a + k b (k >= 0) whose k solves the exact
// congruence, lifted over all k, after the integrality filter. Unverified.
std::vector<IndexCandidate> enumerate_index_candidates(const MapFamily& family, const Real& x, const Real& y,
                                                       const AttackOptions& opts, const Index& bound);

struct DecryptAttack {
  RecoveredIndex index;
  Real plaintext;
};

// M = X / F_r'(y) with r' recovered from (x, u).
DecryptAttack attack_decrypt_detailed(const PublicKey& pk, const Ciphertext& c, const AttackOptions& opts = {});
Real attack_decrypt(const PublicKey& pk, const Ciphertext& c, const AttackOptions& opts = {});

// Shared key F_p'(Y') with p' recovered from (X, Y).
Real attack_key_agreement(const MapFamily& family, const Real& X, const Real& Y, const Real& Y_prime,
                          const AttackOptions& opts = {});

}  // namespace chaoscheb
