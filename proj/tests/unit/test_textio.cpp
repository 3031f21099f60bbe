#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace chaoscheb;
using oracle::R;

namespace {

const PrecisionConfig k9 = PrecisionConfig::protocol(10, 9);

TEST(KeyValue, Parsing) {
  KeyValueFile f = KeyValueFile::parse("# comment\n\na=1\nb = two \n");
  EXPECT_EQ(*f.get("a"), "1");
  EXPECT_EQ(f.require("b"), "two");
  EXPECT_FALSE(f.get("c"));
  EXPECT_THROW(f.require("c"), ParseError);
  EXPECT_THROW(KeyValueFile::parse("novalue\n"), ParseError);
  EXPECT_THROW(KeyValueFile::parse("a=1\na=2\n"), ParseError);
  EXPECT_THROW(KeyValueFile::parse("=1\n"), ParseError);
  EXPECT_TRUE(KeyValueFile::parse("# only\n").empty());
}

TEST(KeyFiles, RoundTrip) {
  MapFamily fam = MapFamily::jacobi(Modulus::from_parameter(R("0.3", k9)));
  KeyPair kp = make_keypair(fam, R("0.435946", k9), 2342);
  std::string pub = format_public_key(kp.pub);
  EXPECT_EQ(pub.substr(0, pub.find("x=")), "scheme=jacobi\nbase=10\ndigits=9\nm=0.300000000\n");
  PublicKey back = parse_public_key(KeyValueFile::parse(pub));
  EXPECT_EQ(back.x, kp.pub.x);
  EXPECT_EQ(back.y, kp.pub.y);
  EXPECT_TRUE(back.family.modulus().parameter_form());
  EXPECT_EQ(format_public_key(back), pub);

  std::string priv = format_private_key(kp);
  KeyPair kb = parse_private_key(KeyValueFile::parse(priv));
  EXPECT_EQ(kb.priv.s, Index(2342));
  EXPECT_EQ(format_private_key(kb), priv);

  Ciphertext c = encrypt_with_index(kp.pub, R("0.5", k9), 1876);
  std::string ct = format_ciphertext(kp.pub, c);
  Ciphertext cb = parse_ciphertext(KeyValueFile::parse(ct), back);
  EXPECT_EQ(cb.u, c.u);
  EXPECT_EQ(cb.X, c.X);
}

TEST(KeyFiles, KForm) {
  MapFamily fam = MapFamily::jacobi(Modulus::from_k(R("0.5", k9)));
  KeyPair kp = make_keypair(fam, R("0.2", k9), 7);
  std::string pub = format_public_key(kp.pub);
  EXPECT_NE(pub.find("k=0.500000000\n"), std::string::npos);
  EXPECT_FALSE(parse_public_key(KeyValueFile::parse(pub)).family.modulus().parameter_form());
}

TEST(KeyFiles, Rejections) {
  KeyPair kp = make_keypair(MapFamily::chebyshev(), R("0.3", k9), 5);
  PublicKey pk = parse_public_key(KeyValueFile::parse(format_public_key(kp.pub)));
  std::string ct = "scheme=chebyshev\nbase=10\ndigits=8\nu=0.10000000\nX=0.10000000\n";
  EXPECT_THROW(parse_ciphertext(KeyValueFile::parse(ct), pk), PrecisionMismatch);
  std::string big = "scheme=chebyshev\nbase=10\ndigits=9\nu=1.500000000\nX=0.100000000\n";
  EXPECT_THROW(parse_ciphertext(KeyValueFile::parse(big), pk), DomainError);
  std::string other = "scheme=jacobi\nbase=10\ndigits=9\nu=0.100000000\nX=0.100000000\n";
  EXPECT_THROW(parse_ciphertext(KeyValueFile::parse(other), pk), PrecisionMismatch);
  EXPECT_THROW(parse_public_key(KeyValueFile::parse("scheme=chebyshev\nbase=10\ndigits=9\nx=1.200000000\n"
                                                    "y=0.100000000\n")),
               DomainError);
  EXPECT_THROW(parse_public_key(KeyValueFile::parse("scheme=chebyshev\nbase=10\ndigits=9\nx=0.2\ny=0.1\n")),
               ParseError);
}

TEST(Scenario, Parsing) {
  Scenario s = parse_scenario(KeyValueFile::parse("scheme=chebyshev\nseed=5\nscenario=keyagreement\np=1\nq=1\n"));
  EXPECT_EQ(s.kind, ScenarioKind::keyagreement);
  EXPECT_EQ(s.seed, 5u);
  EXPECT_EQ(*s.p, Index(1));
  Scenario a = parse_scenario(KeyValueFile::parse("scheme=jacobi\nseed=1\nscenario=auth\nrounds=3\nm=0.3\n"));
  EXPECT_EQ(a.kind, ScenarioKind::auth);
  EXPECT_EQ(a.rounds, 3u);
  EXPECT_EQ(*a.m, "0.3");
  EXPECT_THROW(parse_scenario(KeyValueFile::parse("")), ParseError);
  EXPECT_THROW(parse_scenario(KeyValueFile::parse("scheme=chebyshev\nseed=1\nscenario=chat\n")), ParseError);
}

}  // namespace
