#include "chaoscheb/protocols.hpp"

#include <sstream>

namespace chaoscheb {

namespace {

void check_public_point(const Real& x) {
  const PrecisionConfig& cfg = x.config();
  if (x.abs() > Real::from_int(1, cfg) - cfg.delta()) throw DomainError("public value must satisfy |v| <= 1 - delta");
}

const Message* find_message(const std::vector<Message>& t, const std::string& sender) {
  for (const auto& msg : t) {
    if (msg.sender == sender) return &msg;
  }
  return nullptr;
}

}  // namespace

std::string format_transcript(const std::vector<Message>& transcript) {
  std::ostringstream out;
  for (size_t i = 0; i < transcript.size(); ++i) {
    out << "step=" << i + 1 << " sender=" << transcript[i].sender << " value=" << transcript[i].value.to_string()
        << "\n";
  }
  return out.str();
}

KeyAgreementSession run_key_agreement(const MapFamily& family, const Real& X, const Index& p, const Index& q,
                                      const Index& max_index) {
  check_public_point(X);
  if (p * q > max_index) throw PrecisionBreakdown("p*q exceeds max_index");
  Real Y = family.eval(p, X);
  Real Yp = family.eval(q, X);
  Real za = family.eval(q, Y);
  Real zb = family.eval(p, Yp);
  if (!approx_equal(za, zb)) {
    throw PrecisionBreakdown("derived keys differ: " + za.to_string() + " vs " + zb.to_string());
  }
  return KeyAgreementSession{family, X, p, q, {{"bob", Y}, {"alice", Yp}}, za, zb};
}

Real eavesdrop(const KeyAgreementSession& session, const AttackOptions& opts) {
  const Message* y = find_message(session.transcript, "bob");
  const Message* yp = find_message(session.transcript, "alice");
  if (y == nullptr || yp == nullptr) throw IncompleteTranscript("transcript needs messages from bob and alice");
  return attack_key_agreement(session.family, session.X, y->value, yp->value, opts);
}

AuthState auth_setup(const MapFamily& family, const Real& m, SeededRng& rng, const Index& s_max, const Index& r_max,
                     const Index& max_index) {
  Index r = rng.uniform_index(2, r_max);
  Index s = rng.uniform_index(2, s_max);
  return auth_setup_with(family, m, r, s, max_index);
}

AuthState auth_setup_with(const MapFamily& family, const Real& m, const Index& r, const Index& s,
                          const Index& max_index) {
  check_public_point(m);
  if (r < Index(1) || s < Index(1)) throw DomainError("secrets must be positive");
  return AuthState{family, m, r, s, Index(0), family.eval(r, m), max_index};
}

AuthPair honest_pair(const AuthState& state, const Index& i) {
  unsigned long e = i.to_u64();
  Index si = state.s.pow(e);
  if (si * state.r > state.max_index) {
    throw PrecisionBreakdown("s^" + i.to_string() + " * r exceeds max_index");
  }
  return AuthPair{state.family.eval(si, state.m), state.family.eval(si, state.T_r_m)};
}

bool server_check(const AuthState& state, const AuthPair& pair) {
  Real expected = state.family.eval(state.r, pair.first);
  return approx_equal(expected, pair.auth);
}

AuthRound auth_round(AuthState& state) {
  Index next = state.i + Index(1);
  AuthPair pair = honest_pair(state, next);
  bool ok = server_check(state, pair);
  state.i = next;
  return AuthRound{next, pair, ok};
}

PublicForger::PublicForger(MapFamily family, Real m, Real T_r_m, const AuthPair& first_session,
                           const AttackOptions& opts)
    : family_(std::move(family)),
      m_(std::move(m)),
      T_r_m_(std::move(T_r_m)),
      recovered_(recover_index(family_, m_, first_session.first, opts)) {}

AuthPair PublicForger::forge(const Index& i) const {
  Index e = s_prime().pow(i.to_u64());
  return AuthPair{family_.eval(e, m_), family_.eval(e, T_r_m_)};
}

SessionForger::SessionForger(MapFamily family, const AuthPair& previous, const AuthPair& current,
                             const AttackOptions& opts)
    : family_(std::move(family)), current_(current), recovered_(recover_index(family_, previous.first, current.first, opts)) {}

AuthPair SessionForger::forge(unsigned long ell) const {
  if (ell == 0) throw DomainError("forged sessions start at ell = 1");
  Index e = w().pow(ell);
  return AuthPair{family_.eval(e, current_.first), family_.eval(e, current_.auth)};
}

PublicForger forge_from_public(const MapFamily& family, const Real& m, const Real& T_r_m, const AuthPair& first_session,
                               const AttackOptions& opts) {
  return PublicForger(family, m, T_r_m, first_session, opts);
}

SessionForger forge_from_two_sessions(const MapFamily& family, const AuthPair& previous, const AuthPair& current,
                                      const AttackOptions& opts) {
  return SessionForger(family, previous, current, opts);
}

}  // namespace chaoscheb
