#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace chaoscheb;
using oracle::R;

namespace {

const PrecisionConfig k32 = PrecisionConfig::protocol(10, 32);
const PrecisionConfig k64 = PrecisionConfig::protocol(10, 64);

TEST(KeyAgreement, Worked) {
  MapFamily fam = MapFamily::chebyshev();
  Real X = R("0.64278761", k32);
  KeyAgreementSession s = run_key_agreement(fam, X, 4, 32, Index::pow2(50));
  ASSERT_EQ(s.transcript.size(), 2u);
  EXPECT_EQ(s.transcript[0].sender, "bob");
  EXPECT_EQ(s.transcript[1].sender, "alice");
  EXPECT_TRUE(approx_equal(s.key_alice, fam.eval(128, X)));
  EXPECT_TRUE(approx_equal(s.key_alice, s.key_bob));
  EXPECT_TRUE(approx_equal(eavesdrop(s), s.key_alice));
}

TEST(KeyAgreement, TrivialIndices) {
  MapFamily fam = MapFamily::chebyshev();
  Real X = R("0.3", k32);
  KeyAgreementSession s = run_key_agreement(fam, X, 1, 1, 100);
  EXPECT_EQ(s.key_alice, X);
  EXPECT_EQ(eavesdrop(s), X);
}

TEST(KeyAgreement, JacobiWorked) {
  MapFamily fam = MapFamily::jacobi(Modulus::from_parameter(R("0.3", k32)));
  Real X = phase_point(fam, 5, 29, k32);
  KeyAgreementSession s = run_key_agreement(fam, X, 2342, 1876, Index::pow2(50));
  EXPECT_EQ(s.key_alice.rescale(PrecisionConfig(10, 6)).to_string(), "0.613408");
  EXPECT_TRUE(approx_equal(eavesdrop(s), s.key_alice));
}

TEST(KeyAgreement, SeededSessions) {
  for (bool jac : {false, true}) {
    SeededRng rng(jac ? 31 : 30);
    for (int i = 0; i < 25; ++i) {
      MapFamily fam = jac ? MapFamily::jacobi(Modulus::from_k(rng.uniform_real(Real(k32), R("0.9", k32))))
                          : MapFamily::chebyshev();
      Real X = rng.uniform_real(R("0.99", k32));
      Index p = rng.uniform_index(2, 1000000), q = rng.uniform_index(2, 1000000);
      KeyAgreementSession s = run_key_agreement(fam, X, p, q, Index::pow2(50));
      ASSERT_TRUE(approx_equal(eavesdrop(s), s.key_alice)) << i;
    }
  }
}

TEST(KeyAgreement, IncompleteTranscript) {
  MapFamily fam = MapFamily::chebyshev();
  KeyAgreementSession s = run_key_agreement(fam, R("0.3", k32), 5, 7, 100);
  s.transcript.pop_back();
  EXPECT_THROW(eavesdrop(s), IncompleteTranscript);
  s.transcript.clear();
  EXPECT_THROW(eavesdrop(s), IncompleteTranscript);
}

TEST(KeyAgreement, IndexBound) {
  EXPECT_THROW(run_key_agreement(MapFamily::chebyshev(), R("0.3", k32), 1000, 1000, 1000), PrecisionBreakdown);
}

TEST(Transcript, Format) {
  std::vector<Message> t{{"bob", R("0.5", PrecisionConfig(10, 3))}, {"alice", R("-0.25", PrecisionConfig(10, 3))}};
  EXPECT_EQ(format_transcript(t), "step=1 sender=bob value=0.500\nstep=2 sender=alice value=-0.250\n");
}

TEST(Auth, ExactSmallCase) {
  MapFamily fam = MapFamily::chebyshev();
  AuthState st = auth_setup_with(fam, R("0.5", k32), 3, 2, 1000);
  EXPECT_EQ(st.i, Index(0));
  EXPECT_EQ(st.T_r_m, Real::from_int(-1, k32));
  AuthPair p = honest_pair(st, 1);
  EXPECT_EQ(p.first, R("-0.5", k32));
  EXPECT_EQ(p.auth, Real::from_int(1, k32));
  EXPECT_TRUE(server_check(st, p));
  EXPECT_FALSE(server_check(st, AuthPair{p.first, R("0.9", k32)}));
  AuthRound r = auth_round(st);
  EXPECT_EQ(r.session, Index(1));
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(st.i, Index(1));
}

TEST(Auth, SeededRounds) {
  SeededRng rng(40);
  MapFamily fam = MapFamily::chebyshev();
  AuthState st = auth_setup(fam, R("0.3", k64), rng, 4096, 4096, Index::pow2(100));
  for (int i = 1; i <= 5; ++i) {
    AuthRound r = auth_round(st);
    EXPECT_EQ(r.session, Index(i));
    EXPECT_TRUE(r.accepted);
  }
  SeededRng a(7), b(7);
  AuthState sa = auth_setup(fam, R("0.3", k64), a, 4096, 4096, 1u << 30);
  AuthState sb = auth_setup(fam, R("0.3", k64), b, 4096, 4096, 1u << 30);
  EXPECT_EQ(sa.r, sb.r);
  EXPECT_EQ(sa.s, sb.s);
  EXPECT_THROW(auth_setup_with(fam, Real::from_int(1, k64), 3, 2, 100), DomainError);
  EXPECT_THROW(honest_pair(auth_setup_with(fam, R("0.3", k64), 5, 100, 1000), 2), PrecisionBreakdown);
}

TEST(Forgery, FromPublicData) {
  MapFamily fam = MapFamily::chebyshev();
  AuthState st = auth_setup_with(fam, R("0.5", k32), 3, 3, 1000);
  AuthPair first = honest_pair(st, 1);
  PublicForger f = forge_from_public(fam, st.m, st.T_r_m, first);
  EXPECT_TRUE(approx_equal(fam.eval(f.s_prime(), st.m), first.first));
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(server_check(st, f.forge(i)));
}

TEST(Forgery, FromTwoSessions) {
  MapFamily fam = MapFamily::chebyshev();
  AuthState st = auth_setup_with(fam, R("0.3", k32), 3, 2, 100000);
  AuthPair prev = honest_pair(st, 2), cur = honest_pair(st, 3);
  SessionForger f = forge_from_two_sessions(fam, prev, cur);
  EXPECT_TRUE(approx_equal(fam.eval(f.w(), cheb_halving(4, st.m)), cheb_halving(8, st.m)));
  for (unsigned ell = 1; ell <= 3; ++ell) {
    AuthPair forged = f.forge(ell);
    EXPECT_TRUE(server_check(st, forged)) << ell;
    EXPECT_TRUE(approx_equal(forged.first, honest_pair(st, 3 + ell).first)) << ell;
  }
  EXPECT_THROW(f.forge(0), DomainError);
}

TEST(Forgery, SeededJacobi) {
  SeededRng rng(41);
  MapFamily fam = MapFamily::jacobi(Modulus::from_k(R("0.6", k64)));
  for (int t = 0; t < 5; ++t) {
    AuthState st = auth_setup(fam, rng.uniform_real(R("0.99", k64)), rng, 4096, 4096, Index::pow2(100));
    PublicForger pf = forge_from_public(fam, st.m, st.T_r_m, honest_pair(st, 1));
    EXPECT_TRUE(server_check(st, pf.forge(2)));
    SessionForger sf = forge_from_two_sessions(fam, honest_pair(st, 1), honest_pair(st, 2));
    EXPECT_TRUE(server_check(st, sf.forge(1)));
  }
}

}  // namespace
