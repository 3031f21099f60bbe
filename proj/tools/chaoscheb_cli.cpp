// chaoscheb: key generation, encryption, the index-recovery attack, and the
// protocol scenarios from the command line.
//
// Exit codes: 0 success, 2 bad input (parse, precision mismatch, domain),
// 3 precision breakdown, 4 attack failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chaoscheb/chaoscheb.hpp"

using namespace chaoscheb;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitBreakdown = 3;
constexpr int kExitAttack = 4;

struct Globals {
  int base = 10;
  int digits = 32;
  int guard = PrecisionConfig::kDefaultGuard;
  std::optional<std::uint64_t> seed;
  std::string max_index;
  std::string scheme = "chebyshev";
  std::string k;
  std::string m;
  std::string out;
  std::string report;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

PrecisionConfig config_of(const Globals& g) { return PrecisionConfig::protocol(g.base, g.digits, g.guard); }

// Decimal, or 2^e.
Index parse_index_arg(const std::string& text) {
  if (text.rfind("2^", 0) == 0) {
    Index e = Index::parse(text.substr(2));
    return Index::pow2(e.to_u64());
  }
  return Index::parse(text);
}

Index max_index_of(const Globals& g, const PrecisionConfig& cfg) {
  return g.max_index.empty() ? default_max_index(cfg) : parse_index_arg(g.max_index);
}

SeededRng rng_of(const Globals& g, const char* what) {
  if (!g.seed) throw ParseError(std::string(what) + " draws random values; pass --seed");
  return SeededRng(*g.seed);
}

// The modulus from --k / --m (or a scenario's k=), otherwise k uniform in [0, 0.9].
Modulus modulus_of(const std::string& k, const std::string& m, const PrecisionConfig& cfg,
                   std::optional<SeededRng>& rng) {
  if (!k.empty() && !m.empty()) throw ParseError("give at most one of --k and --m");
  if (!k.empty()) return Modulus::from_k(Real::parse(k, cfg));
  if (!m.empty()) return Modulus::from_parameter(Real::parse(m, cfg));
  if (!rng) throw ParseError("jacobi scheme without --k/--m draws k at random; pass --seed");
  return Modulus::from_k(rng->uniform_real(Real(cfg), Real::from_ratio(9, 10, cfg)));
}

MapFamily family_of(Scheme scheme, const std::string& k, const std::string& m, const PrecisionConfig& cfg,
                    std::optional<SeededRng>& rng) {
  if (scheme == Scheme::chebyshev) return MapFamily::chebyshev();
  return MapFamily::jacobi(modulus_of(k, m, cfg, rng));
}

std::pair<mpz_class, mpz_class> parse_phase(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw ParseError("--x-phase expects p/q");
  Index p = Index::parse(text.substr(0, slash));
  Index q = Index::parse(text.substr(slash + 1));
  if (q.is_zero()) throw ParseError("--x-phase denominator must be positive");
  return {p.value(), q.value()};
}

std::string join(const std::vector<mpz_class>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out;
}

// ---------------------------------------------------------------------------

struct KeygenArgs {
  std::string x, x_phase, s, pub;
};

int cmd_keygen(const Globals& g, const KeygenArgs& a) {
  PrecisionConfig cfg = config_of(g);
  Index max_index = max_index_of(g, cfg);
  std::optional<SeededRng> rng;
  if (g.seed) rng.emplace(*g.seed);
  MapFamily family = family_of(parse_scheme(g.scheme), g.k, g.m, cfg, rng);
  if (!a.x.empty() && !a.x_phase.empty()) throw ParseError("give at most one of --x and --x-phase");
  auto need_rng = [&]() -> SeededRng& {
    if (!rng) throw ParseError("keygen draws random values; pass --seed");
    return *rng;
  };
  Index s = a.s.empty() ? need_rng().uniform_index(2, max_index) : Index::parse(a.s);
  Real x(cfg);
  if (!a.x.empty()) {
    x = Real::parse(a.x, cfg);
  } else if (!a.x_phase.empty()) {
    auto [p, q] = parse_phase(a.x_phase);
    x = phase_point(family, p, q, cfg);
  } else {
    x = need_rng().uniform_real(Real::from_int(1, cfg) - cfg.delta());
  }
  KeyPair kp = make_keypair(family, x, s);
  if (!a.pub.empty()) write_output(a.pub, format_public_key(kp.pub));
  write_output(g.out, format_private_key(kp));
  return 0;
}

struct EncryptArgs {
  std::string pub, msg, r;
};

int cmd_encrypt(const Globals& g, const EncryptArgs& a) {
  PublicKey pk = parse_public_key(KeyValueFile::parse(read_file(a.pub)), g.guard);
  const PrecisionConfig& cfg = pk.x.config();
  Real M = Real::parse(a.msg, cfg);
  Ciphertext c = [&] {
    if (!a.r.empty()) return encrypt_with_index(pk, M, Index::parse(a.r));
    SeededRng rng = rng_of(g, "encrypt");
    return encrypt(pk, M, rng, max_index_of(g, cfg));
  }();
  write_output(g.out, format_ciphertext(pk, c));
  return 0;
}

struct DecryptArgs {
  std::string key, ct;
};

int cmd_decrypt(const Globals& g, const DecryptArgs& a) {
  KeyPair kp = parse_private_key(KeyValueFile::parse(read_file(a.key)), g.guard);
  Ciphertext c = parse_ciphertext(KeyValueFile::parse(read_file(a.ct)), kp.pub);
  write_output(g.out, decrypt(kp.pub, kp.priv, c).to_string() + "\n");
  return 0;
}

struct AttackArgs {
  std::string pub, ct, oracle_key, branch = "both";
  int congruence_digits = 0;
};

AttackOptions attack_options(const Globals& g, const PrecisionConfig& cfg, int congruence_digits,
                             const std::string& branch) {
  AttackOptions o;
  o.congruence_digits = congruence_digits;
  o.max_index = max_index_of(g, cfg);
  if (branch == "plus") {
    o.branches = BranchChoice::plus_only;
  } else if (branch == "minus") {
    o.branches = BranchChoice::minus_only;
  } else if (branch != "both") {
    throw ParseError("--branch must be both, plus or minus");
  }
  return o;
}

int cmd_attack(const Globals& g, const AttackArgs& a) {
  PublicKey pk = parse_public_key(KeyValueFile::parse(read_file(a.pub)), g.guard);
  Ciphertext c = parse_ciphertext(KeyValueFile::parse(read_file(a.ct)), pk);
  const PrecisionConfig& cfg = pk.x.config();
  DecryptAttack res = attack_decrypt_detailed(pk, c, attack_options(g, cfg, a.congruence_digits, a.branch));
  const RecoveredIndex& idx = res.index;

  bool oracle = cmpabs(idx.residual.scaled(), cfg.epsilon_scaled()) <= 0;
  if (!a.oracle_key.empty()) {
    KeyPair kp = parse_private_key(KeyValueFile::parse(read_file(a.oracle_key)), g.guard);
    oracle = approx_equal(decrypt(kp.pub, kp.priv, c), res.plaintext);
  }
  std::ostringstream rep;
  rep << "a=" << idx.params.a.to_string() << "\n"
      << "b=" << idx.params.b.to_string() << "\n"
      << "a_prime=" << idx.params.a_prime.get_str() << "\n"
      << "b_prime=" << idx.params.b_prime.get_str() << "\n"
      << "plus_solutions=" << join(idx.plus_solutions) << "\n"
      << "minus_solutions=" << join(idx.minus_solutions) << "\n"
      << "method=" << to_string(idx.method) << "\n"
      << "branch=" << to_string(idx.branch) << "\n"
      << "k=" << idx.k_used.get_str() << "\n"
      << "r_prime=" << idx.r_prime.to_string() << "\n"
      << "residual=" << idx.residual.to_string() << "\n"
      << "recovered=" << res.plaintext.to_string() << "\n"
      << "oracle_match=" << (oracle ? "true" : "false") << "\n";
  std::cout << rep.str();
  if (!g.report.empty()) write_output(g.report, rep.str());
  return 0;
}

// ---------------------------------------------------------------------------
// Scenarios

struct ScenarioArgs {
  std::string path, forge = "sessions";
};

struct ScenarioEnv {
  Scenario sc;
  PrecisionConfig cfg;
  Index max_index;
  std::optional<SeededRng> rng;
  MapFamily family;
};

ScenarioEnv load_scenario(const Globals& g, const std::string& path) {
  Scenario sc = parse_scenario(KeyValueFile::parse(read_file(path)));
  PrecisionConfig cfg = config_of(g);
  std::optional<SeededRng> rng(std::in_place, sc.seed);
  std::string k = sc.k ? *sc.k : g.k;
  std::string m = sc.k ? std::string() : g.m;
  MapFamily family = family_of(sc.scheme, k, m, cfg, rng);
  return ScenarioEnv{sc, cfg, max_index_of(g, cfg), std::move(rng), family};
}

Real point_or_draw(const std::optional<std::string>& given, ScenarioEnv& env) {
  if (given) return Real::parse(*given, env.cfg);
  return env.rng->uniform_real(Real::from_int(1, env.cfg) - env.cfg.delta());
}

KeyAgreementSession scenario_session(ScenarioEnv& env) {
  if (env.sc.kind != ScenarioKind::keyagreement) throw ParseError("scenario is not keyagreement");
  Real X = point_or_draw(env.sc.x, env);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), env.max_index.value().get_mpz_t());
  Index bound(std::min(root, mpz_class(1000000)));
  if (bound < Index(2)) throw ParseError("max_index too small for a key agreement");
  Index p = env.sc.p ? *env.sc.p : env.rng->uniform_index(2, bound);
  Index q = env.sc.q ? *env.sc.q : env.rng->uniform_index(2, bound);
  return run_key_agreement(env.family, X, p, q, env.max_index);
}

int cmd_keyexchange(const Globals& g, const ScenarioArgs& a) {
  ScenarioEnv env = load_scenario(g, a.path);
  KeyAgreementSession s = scenario_session(env);
  std::cout << "X=" << s.X.to_string() << "\n" << format_transcript(s.transcript)
            << "honest_key=" << s.key_bob.to_string() << "\n";
  return 0;
}

int cmd_eavesdrop(const Globals& g, const ScenarioArgs& a) {
  ScenarioEnv env = load_scenario(g, a.path);
  KeyAgreementSession s = scenario_session(env);
  AttackOptions o;
  o.max_index = env.max_index;
  Real eve = eavesdrop(s, o);
  bool match = approx_equal(eve, s.key_bob);
  std::cout << "X=" << s.X.to_string() << "\n" << format_transcript(s.transcript)
            << "honest_key=" << s.key_bob.to_string() << "\n"
            << "eve_key=" << eve.to_string() << "\n"
            << "match=" << (match ? "true" : "false") << "\n";
  return match ? 0 : kExitAttack;
}

// Largest secret bound such that s^top * r stays under max_index.
Index auth_bound(const Index& max_index, unsigned top) {
  mpz_class root;
  mpz_root(root.get_mpz_t(), max_index.value().get_mpz_t(), top + 1);
  Index b(std::min(root, mpz_class(65536)));
  if (b < Index(2)) throw ParseError("max_index too small for " + std::to_string(top) + " sessions");
  return b;
}

AuthState scenario_auth(ScenarioEnv& env, unsigned top_session) {
  if (env.sc.kind != ScenarioKind::auth) throw ParseError("scenario is not auth");
  Real m = point_or_draw(env.sc.m, env);
  Index bound = auth_bound(env.max_index, top_session);
  Index r = env.sc.r ? *env.sc.r : env.rng->uniform_index(2, bound);
  Index s = env.sc.s ? *env.sc.s : env.rng->uniform_index(2, bound);
  return auth_setup_with(env.family, m, r, s, env.max_index);
}

void print_pair(const char* tag, const Index& session, const AuthPair& p) {
  std::cout << tag << " round=" << session.to_string() << " first=" << p.first.to_string()
            << " auth=" << p.auth.to_string();
}

int cmd_auth(const Globals& g, const ScenarioArgs& a) {
  ScenarioEnv env = load_scenario(g, a.path);
  AuthState st = scenario_auth(env, env.sc.rounds);
  std::cout << "m=" << st.m.to_string() << "\nT_r_m=" << st.T_r_m.to_string() << "\n";
  bool all = true;
  for (unsigned i = 0; i < env.sc.rounds; ++i) {
    AuthRound rd = auth_round(st);
    print_pair("honest", rd.session, rd.pair);
    std::cout << " accepted=" << (rd.accepted ? "true" : "false") << "\n";
    all = all && rd.accepted;
  }
  return all ? 0 : kExitBreakdown;
}

int cmd_auth_forge(const Globals& g, const ScenarioArgs& a) {
  ScenarioEnv env = load_scenario(g, a.path);
  const unsigned rounds = env.sc.rounds;
  AttackOptions o;
  o.max_index = env.max_index;
  bool all = true;
  if (a.forge == "public") {
    AuthState st = scenario_auth(env, rounds + 1);
    std::cout << "m=" << st.m.to_string() << "\nT_r_m=" << st.T_r_m.to_string() << "\n";
    AuthRound first = auth_round(st);
    print_pair("captured", first.session, first.pair);
    std::cout << "\n";
    PublicForger f = forge_from_public(st.family, st.m, st.T_r_m, first.pair, o);
    std::cout << "s_prime=" << f.s_prime().to_string() << "\n";
    for (unsigned i = 2; i < rounds + 2; ++i) {
      AuthPair p = f.forge(i);
      bool ok = server_check(st, p);
      print_pair("forged", i, p);
      std::cout << " accepted=" << (ok ? "true" : "false") << "\n";
      all = all && ok;
    }
  } else if (a.forge == "sessions") {
    AuthState st = scenario_auth(env, rounds + 2);
    AuthRound prev = auth_round(st);
    AuthRound cur = auth_round(st);
    print_pair("captured", prev.session, prev.pair);
    std::cout << "\n";
    print_pair("captured", cur.session, cur.pair);
    std::cout << "\n";
    SessionForger f = forge_from_two_sessions(st.family, prev.pair, cur.pair, o);
    std::cout << "w=" << f.w().to_string() << "\n";
    for (unsigned ell = 1; ell <= rounds; ++ell) {
      AuthPair p = f.forge(ell);
      bool ok = server_check(st, p);
      print_pair("forged", cur.session + Index(ell), p);
      std::cout << " accepted=" << (ok ? "true" : "false") << "\n";
      all = all && ok;
    }
  } else {
    throw ParseError("--forge must be public or sessions");
  }
  return all ? 0 : kExitAttack;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string ns = "1000,1000000";
  std::string digits;
  int repetitions = 5;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw ParseError("empty list '" + text + "'");
  return out;
}

int cmd_bench(const Globals& g, const BenchArgs& a) {
  BenchOptions o;
  o.base = g.base;
  o.repetitions = a.repetitions;
  for (const auto& n : split_list(a.ns)) o.ns.push_back(parse_index_arg(n));
  if (a.digits.empty()) {
    o.digits = {g.digits};
  } else {
    for (const auto& d : split_list(a.digits)) o.digits.push_back(std::stoi(d));
  }
  auto cells = run_bench(o);
  std::cout << format_bench(cells);
  GrowthCheck gc = check_halving_growth(cells);
  if (gc.pairs > 0) {
    std::cout << "halving_growth_ratio=" << gc.worst_ratio << "\n"
              << "halving_growth_ok=" << (gc.ok ? "true" : "false") << "\n";
  }
  for (int L : o.digits) {
    for (const auto& n : o.ns) {
      double r = linear_halving_ratio(cells, n, L);
      if (r > 0 && n == Index(kLinearLimit)) {
        std::cout << "linear_over_halving n=" << n.to_string() << " digits=" << L << " ratio=" << r << "\n";
      }
    }
  }
  return 0;
}

int default_digits() {
  if (const char* env = std::getenv("CHAOSCHEB_PRECISION")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ParseError("CHAOSCHEB_PRECISION must be an integer");
    }
  }
  return 32;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  try {
    g.digits = default_digits();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App app{"Chebyshev and Jacobian elliptic map cryptosystems and their attacks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--base", g.base, "Radix B of the fixed-point reals")->check(CLI::Range(2, 36));
  app.add_option("--digits", g.digits, "Fractional digits L (default: $CHAOSCHEB_PRECISION or 32)")
      ->check(CLI::PositiveNumber);
  app.add_option("--guard", g.guard, "Guard digits for internal evaluation")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for every random draw");
  app.add_option("--max-index", g.max_index, "Index bound, decimal or 2^e (default tied to precision)");
  app.add_option("--scheme", g.scheme, "chebyshev or jacobi")->check(CLI::IsMember({"chebyshev", "jacobi"}));
  app.add_option("--k", g.k, "Elliptic modulus k (jacobi)");
  app.add_option("--m", g.m, "Elliptic parameter m = k^2 (jacobi)");
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--report", g.report, "Attack report file");

  std::function<int()> run;

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--x", kg.x, "Public point x (or omega)");
  keygen->add_option("--x-phase", kg.x_phase, "Public point at phase p/q of the period");
  keygen->add_option("--s", kg.s, "Private index s");
  keygen->add_option("--pub", kg.pub, "Also write the public key here");
  keygen->callback([&] { run = [&] { return cmd_keygen(g, kg); }; });

  EncryptArgs en;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a message M in [-1, 1]");
  encrypt_cmd->add_option("--pub", en.pub, "Public key file")->required();
  encrypt_cmd->add_option("--msg", en.msg, "Plaintext real")->required();
  encrypt_cmd->add_option("--r", en.r, "Ephemeral index (default: drawn from --seed)");
  encrypt_cmd->callback([&] { run = [&] { return cmd_encrypt(g, en); }; });

  DecryptArgs de;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt with the private key");
  decrypt_cmd->add_option("--key", de.key, "Private key file")->required();
  decrypt_cmd->add_option("--ct", de.ct, "Ciphertext file")->required();
  decrypt_cmd->callback([&] { run = [&] { return cmd_decrypt(g, de); }; });

  AttackArgs at;
  auto* attack_cmd = app.add_subcommand("attack", "Recover the plaintext from public data only");
  attack_cmd->add_option("--pub", at.pub, "Public key file")->required();
  attack_cmd->add_option("--ct", at.ct, "Ciphertext file")->required();
  attack_cmd->add_option("--congruence-digits", at.congruence_digits, "Digits for the congruence (default: L)");
  attack_cmd->add_option("--branch", at.branch, "both, plus or minus");
  attack_cmd->add_option("--oracle-key", at.oracle_key, "Private key used only to check the result");
  attack_cmd->callback([&] { run = [&] { return cmd_attack(g, at); }; });

  ScenarioArgs sa;
  auto add_scenario = [&](const char* name, const char* help, int (*fn)(const Globals&, const ScenarioArgs&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--scenario", sa.path, "Scenario file")->required();
    sub->callback([&, fn] { run = [&, fn] { return fn(g, sa); }; });
    return sub;
  };
  add_scenario("keyexchange", "Run a key agreement scenario", cmd_keyexchange);
  add_scenario("eavesdrop", "Run a key agreement and the passive attack", cmd_eavesdrop);
  add_scenario("auth", "Run honest authentication rounds", cmd_auth);
  auto* forge = add_scenario("auth-forge", "Forge authentication sessions", cmd_auth_forge);
  forge->add_option("--forge", sa.forge, "sessions (two captured sessions) or public (m, T_r(m) public)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time the Chebyshev evaluators");
  bench->add_option("--n", ba.ns, "Comma-separated indices (decimal or 2^e)");
  bench->add_option("--bench-digits", ba.digits, "Comma-separated digit counts (default: --digits)");
  bench->add_option("--repetitions", ba.repetitions, "Timed repetitions per cell")->check(CLI::PositiveNumber);
  bench->callback([&] { run = [&] { return cmd_bench(g, ba); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    return run();
  } catch (const AttackFailed& e) {
    std::cerr << "attack failed: " << e.what() << "\n";
    return kExitAttack;
  } catch (const PrecisionBreakdown& e) {
    std::cerr << "precision breakdown: " << e.what() << "\n";
    return kExitBreakdown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
