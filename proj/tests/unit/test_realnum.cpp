#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "fixed.hpp"
#include "oracle.hpp"

using namespace chaoscheb;
using oracle::R;

namespace {

const char* kPi310 =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808"
    "6513282306647093844609550582231725359408128481117450284102701938521105559644622948954930381964428810975665933"
    "44612847564823378678316527120190914564856692346034861045432664821339360726024914127372458700";

TEST(Real, AddInSeveralBases) {
  for (int base : {2, 10, 16}) {
    PrecisionConfig cfg(base, 8);
    Real half = Real::from_ratio(1, 2, cfg);
    Real quarter = Real::from_ratio(1, 4, cfg);
    EXPECT_EQ(add(half, quarter), Real::from_ratio(3, 4, cfg)) << base;
  }
  PrecisionConfig cfg(10, 9);
  EXPECT_EQ(add(R("0.5", cfg), R("0.25", cfg)).to_string(), "0.750000000");
}

TEST(Real, MulMatchesExactProduct) {
  PrecisionConfig cfg(10, 9);
  Real a = R("0.64278761", cfg);
  mpq_class exact = oracle::to_q(a) * oracle::to_q(a);
  EXPECT_EQ(mul(a, a), oracle::round_q(exact, cfg));
  EXPECT_EQ(mul(a, a).to_string(), "0.413175912");
}

TEST(Real, DivisionRoundsHalfEven) {
  PrecisionConfig cfg(10, 4);
  EXPECT_EQ(div(Real::from_int(1, cfg), Real::from_int(3, cfg)).to_string(), "0.3333");
  EXPECT_EQ(Real::from_ratio(1, 8, PrecisionConfig(10, 2)).to_string(), "0.12");
  EXPECT_EQ(Real::from_ratio(3, 8, PrecisionConfig(10, 2)).to_string(), "0.38");
  EXPECT_EQ(Real::from_ratio(-1, 8, PrecisionConfig(10, 2)).to_string(), "-0.12");
}

TEST(Real, DivisionByZero) {
  PrecisionConfig cfg(10, 4);
  EXPECT_THROW(div(Real::from_int(1, cfg), Real(cfg)), DegenerateInput);
}

TEST(Real, MixedConfigsRejected) {
  EXPECT_THROW(add(Real::from_int(1, PrecisionConfig(10, 4)), Real::from_int(1, PrecisionConfig(10, 5))),
               PrecisionMismatch);
  EXPECT_THROW(mul(Real::from_int(1, PrecisionConfig(10, 4)), Real::from_int(1, PrecisionConfig(2, 4))),
               PrecisionMismatch);
}

TEST(Real, PiAgainstReference) {
  EXPECT_EQ(pi(PrecisionConfig(10, 9)).to_string(), "3.141592654");
  for (int L = 1; L <= 256; ++L) {
    PrecisionConfig cfg(10, L);
    ASSERT_EQ(pi(cfg), R(kPi310, cfg)) << L;
  }
}

TEST(Real, PiConsistentAcrossPrecisions) {
  Real wide = pi(PrecisionConfig(10, 256));
  for (int L = 1; L < 256; L += 7) {
    PrecisionConfig cfg(10, L);
    EXPECT_EQ(pi(cfg), wide.rescale(cfg)) << L;
  }
}

TEST(Real, CosOfLargeArgument) {
  PrecisionConfig wide(10, 32);
  Real theta = mul(Real::from_ratio(106000 * 5, 18, wide), pi(wide));
  EXPECT_EQ(cos(theta).rescale(PrecisionConfig(10, 9)).to_string(), "0.173648178");
}

TEST(Real, CosMatchesTaylorOracle) {
  for (int L : {9, 32, 60}) {
    PrecisionConfig cfg(10, L);
    for (auto [p, q] : {std::pair{1, 1}, {1, 3}, {-7, 4}, {22, 7}, {100, 1}}) {
      mpq_class t(p, q);
      t.canonicalize();
      Real theta = oracle::round_q(t, cfg);
      mpq_class exact = oracle::cos_taylor(oracle::to_q(theta), 4 * L + 64);
      EXPECT_TRUE(oracle::within_ulps(cos(theta), oracle::round_q(exact, cfg), 1)) << L << " " << p << "/" << q;
    }
  }
  EXPECT_EQ(cos(R("1", PrecisionConfig(10, 40))),
            R("0.540302305868139717400936607442976603732310420617922227670097", PrecisionConfig(10, 40)));
}

TEST(Real, CosEdgeValues) {
  PrecisionConfig cfg(10, 20);
  EXPECT_EQ(cos(Real(cfg)), Real::from_int(1, cfg));
  EXPECT_EQ(cos(pi(cfg)), Real::from_int(-1, cfg));
  EXPECT_TRUE(sin(Real(cfg)).is_zero());
}

TEST(Real, ArccosValues) {
  PrecisionConfig cfg(10, 9);
  EXPECT_TRUE(arccos(Real::from_int(1, cfg)).is_zero());
  EXPECT_EQ(arccos(Real::from_int(-1, cfg)), pi(cfg));
  EXPECT_EQ(arccos(R("0.64278761", cfg)).to_string(), "0.872664626");
  Real want = mul(Real::from_ratio(8, 9, PrecisionConfig(10, 20)), pi(PrecisionConfig(10, 20))).rescale(cfg);
  EXPECT_TRUE(oracle::within_ulps(arccos(R("-0.939692621", cfg)), want, 1));
  EXPECT_THROW(arccos(R("1.5", cfg)), DomainError);
}

TEST(Real, CosArccosRoundTrip) {
  PrecisionConfig cfg(10, 32);
  SeededRng rng(11);
  Real one = Real::from_int(1, cfg);
  for (int i = 0; i < 1000; ++i) {
    Real v = rng.uniform_real(one);
    ASSERT_TRUE(approx_equal(cos(arccos(v)), v)) << v.to_string();
  }
}

TEST(Real, ArccosMonotone) {
  PrecisionConfig cfg(10, 32);
  SeededRng rng(12);
  std::vector<Real> vs;
  Real one = Real::from_int(1, cfg);
  for (int i = 0; i < 400; ++i) vs.push_back(rng.uniform_real(one));
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 1; i < vs.size(); ++i) ASSERT_GE(arccos(vs[i - 1]), arccos(vs[i]));
}

TEST(Real, ArithmeticMatchesRationalOracle) {
  std::mt19937_64 gen(5);
  for (int base : {2, 10, 16, 36}) {
    PrecisionConfig cfg(base, 24);
    SeededRng rng(base);
    Real bound = Real::from_int(3, cfg);
    for (int i = 0; i < 250; ++i) {
      Real a = rng.uniform_real(bound), b = rng.uniform_real(bound);
      mpq_class qa = oracle::to_q(a), qb = oracle::to_q(b);
      ASSERT_EQ(add(a, b), oracle::round_q(qa + qb, cfg));
      ASSERT_EQ(a - b, oracle::round_q(qa - qb, cfg));
      ASSERT_EQ(mul(a, b), oracle::round_q(qa * qb, cfg));
      if (!b.is_zero()) ASSERT_EQ(div(a, b), oracle::round_q(qa / qb, cfg));
    }
  }
}

TEST(Real, SerializationRoundTrip) {
  for (int base : {2, 8, 10, 16, 36}) {
    for (int L : {1, 5, 32}) {
      PrecisionConfig cfg(base, L);
      SeededRng rng(base * 100 + L);
      Real bound = Real::from_int(1000, cfg);
      for (int i = 0; i < 100; ++i) {
        Real v = rng.uniform_real(bound);
        std::string s = v.to_string();
        ASSERT_EQ(s.size() - s.find('.') - 1, static_cast<std::size_t>(L));
        ASSERT_EQ(Real::parse_canonical(s, cfg), v) << s;
        ASSERT_EQ(Real::parse(s, cfg), v) << s;
      }
    }
  }
}

TEST(Real, ParsingRules) {
  PrecisionConfig cfg(10, 3);
  EXPECT_EQ(R("-0.0005", cfg).to_string(), "0.000");
  EXPECT_EQ(R("0.0015", cfg).to_string(), "0.002");
  EXPECT_EQ(R("7", cfg).to_string(), "7.000");
  EXPECT_EQ(Real::parse("ff.8", PrecisionConfig(16, 2)).to_string(), "ff.80");
  EXPECT_THROW(Real::parse_canonical("0.12", cfg), ParseError);
  EXPECT_THROW(Real::parse_canonical("0.1234", cfg), ParseError);
  EXPECT_THROW(R("1.2x", cfg), ParseError);
  EXPECT_THROW(R("", cfg), ParseError);
  EXPECT_THROW(Real::parse("2", PrecisionConfig(2, 3)), ParseError);
}

TEST(Real, ConfigEpsilonAndBits) {
  PrecisionConfig cfg(10, 32);
  EXPECT_EQ(cfg.epsilon().to_string(), "0.00000000000000000000000000000100");
  EXPECT_EQ(PrecisionConfig::protocol(10, 32).epsilon().to_string(), "0.00000000000000010000000000000000");
  EXPECT_EQ(cfg.delta(), R("0.0000000000000001", cfg));
  EXPECT_EQ(PrecisionConfig(10, 2).epsilon().to_string(), "0.10");
  EXPECT_GE(cfg.working_bits(), static_cast<long>((32 + 16) * 3.3219));
  EXPECT_THROW(PrecisionConfig(1, 5), DomainError);
  EXPECT_THROW(PrecisionConfig(37, 5), DomainError);
  EXPECT_THROW(PrecisionConfig(10, 0), DomainError);
}

TEST(Real, FracScaled) {
  PrecisionConfig cfg(10, 1);
  EXPECT_EQ(frac_scaled(R("3.2", cfg)), 2);
  EXPECT_EQ(frac_scaled(R("7.2", cfg)), 2);
  EXPECT_EQ(frac_scaled(R("5.0", cfg)), 0);
  EXPECT_EQ(frac_scaled(R("-3.2", cfg)), 8);
  PrecisionConfig wide(10, 6);
  EXPECT_EQ(frac_scaled(R("2.637264", wide), 1), 6);
  EXPECT_EQ(frac_scaled(R("2.97", wide), 1), 0);
}

TEST(Real, Sqrt) {
  PrecisionConfig cfg(10, 20);
  EXPECT_EQ(sqrt(Real::from_int(4, cfg)), Real::from_int(2, cfg));
  EXPECT_EQ(sqrt(R("2", cfg)).to_string(), "1.41421356237309504880");
  EXPECT_THROW(sqrt(R("-1", cfg)), DomainError);
}

TEST(Real, Rescale) {
  Real v = R("0.123456789", PrecisionConfig(10, 9));
  EXPECT_EQ(v.rescale(PrecisionConfig(10, 4)).to_string(), "0.1235");
  EXPECT_EQ(Real::from_ratio(1, 2, PrecisionConfig(10, 4)).rescale(PrecisionConfig(2, 3)).to_string(), "0.100");
}

TEST(Index, Basics) {
  EXPECT_EQ(Index::parse("106000").to_u64(), 106000u);
  EXPECT_EQ(Index::pow2(20).bit_length(), 21u);
  EXPECT_EQ(Index(0).bit_length(), 0u);
  EXPECT_THROW(Index::parse("-3"), ParseError);
  EXPECT_THROW(Index::parse("1e5"), ParseError);
  EXPECT_THROW(Index(3) - Index(5), DomainError);
  EXPECT_EQ(Index(81500) * Index(106000), Index::parse("8639000000"));
  EXPECT_FALSE(Index::pow2(64).fits_u64());
}

TEST(Kernel, SinCosCountsAndPi) {
  detail::Kernel k(200);
  mpz_class s, c;
  k.sin_cos(k.one(), s, c);
  EXPECT_EQ(k.sin_cos_calls(), 1u);
  mpz_class ulp = 1;
  EXPECT_LE(abs(detail::fx_pi(200) - k.pi()), ulp);
  mpz_class sq = detail::fx_mul(s, s, 200) + detail::fx_mul(c, c, 200) - k.one();
  EXPECT_LE(abs(sq), mpz_class(8));
}

}  // namespace
