#pragma once

// Key agreement and entity authentication built on a semi-group map family,
// with the passive attacks against both.

#include <string>
#include <vector>

#include "chaoscheb/attack.hpp"
#include "chaoscheb/cryptosystem.hpp"

namespace chaoscheb {

struct Message {
  std::string sender;
  Real value;
};

// One line per message: "step=<n> sender=<name> value=<real>", n from 1.
std::string format_transcript(const std::vector<Message>& transcript);

struct KeyAgreementSession {
  MapFamily family;
  Real X;
  Index p;  // Bob
  Index q;  // Alice
  std::vector<Message> transcript;
  Real key_alice;  // F_q(Y)
  Real key_bob;    // F_p(Y')
};

// Bob sends Y = F_p(X), Alice sends Y' = F_q(X). PrecisionBreakdown when
// p*q > max_index or the two derived keys differ by more than epsilon.
KeyAgreementSession run_key_agreement(const MapFamily& family, const Real& X, const Index& p, const Index& q,
                                      const Index& max_index);

// Shared key from the transcript alone. IncompleteTranscript unless both Y
// (from bob) and Y' (from alice) are present.
Real eavesdrop(const KeyAgreementSession& session, const AttackOptions& opts = {});

struct AuthState {
  MapFamily family;
  Real m;
  Index r;  // server secret
  Index s;  // user secret
  Index i;  // last completed session
  Real T_r_m;
  Index max_index;
};

struct AuthPair {
  Real first;  // F_{s^i}(m)
  Real auth;   // F_{s^i}(F_r(m))
};

struct AuthRound {
  Index session;
  AuthPair pair;
  bool accepted;
};

// r uniform in [2, r_max], s uniform in [2, s_max]. DomainError when
// |m| > 1 - delta.
AuthState auth_setup(const MapFamily& family, const Real& m, SeededRng& rng, const Index& s_max, const Index& r_max,
                     const Index& max_index);
AuthState auth_setup_with(const MapFamily& family, const Real& m, const Index& r, const Index& s,
                          const Index& max_index);

// The honest user's pair for session i. PrecisionBreakdown when
// s^i * r > max_index.
AuthPair honest_pair(const AuthState& state, const Index& i);

// Server side: accepted iff |F_r(first) - auth| <= epsilon.
bool server_check(const AuthState& state, const AuthPair& pair);

// Advances to session i + 1 and runs the honest exchange.
AuthRound auth_round(AuthState& state);

// Forger holding m, F_r(m) and the pair of one session with i = 1.
class PublicForger {
 public:
  PublicForger(MapFamily family, Real m, Real T_r_m, const AuthPair& first_session, const AttackOptions& opts = {});

  const RecoveredIndex& recovered() const { return recovered_; }
  const Index& s_prime() const { return recovered_.r_prime; }
  // (F_{s'^i}(m), F_{s'^i}(F_r(m))).
  AuthPair forge(const Index& i) const;

 private:
  MapFamily family_;
  Real m_;
  Real T_r_m_;
  RecoveredIndex recovered_;
};

// Forger holding only two consecutive session pairs (i - 1 and i).
class SessionForger {
 public:
  SessionForger(MapFamily family, const AuthPair& previous, const AuthPair& current, const AttackOptions& opts = {});

  const RecoveredIndex& recovered() const { return recovered_; }
  const Index& w() const { return recovered_.r_prime; }
  // Pair for session i + ell (ell >= 1): F_{w^ell} applied to the session-i pair.
  AuthPair forge(unsigned long ell) const;

 private:
  MapFamily family_;
  AuthPair current_;
  RecoveredIndex recovered_;
};

PublicForger forge_from_public(const MapFamily& family, const Real& m, const Real& T_r_m, const AuthPair& first_session,
                               const AttackOptions& opts = {});
SessionForger forge_from_two_sessions(const MapFamily& family, const AuthPair& previous, const AuthPair& current,
                                      const AttackOptions& opts = {});

}  // namespace chaoscheb
