#include "chaoscheb/textio.hpp"

#include <charconv>
#include <sstream>

namespace chaoscheb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("'" + key + "' is not a valid integer: '" + text + "'");
  }
  return v;
}

std::string header_lines(const PublicKey& pk) {
  const PrecisionConfig& cfg = pk.x.config();
  std::ostringstream out;
  out << "scheme=" << to_string(pk.family.scheme()) << "\n"
      << "base=" << cfg.base() << "\n"
      << "digits=" << cfg.digits() << "\n";
  return out.str();
}

Real read_real(const KeyValueFile& f, const std::string& key, const PrecisionConfig& cfg) {
  return Real::parse_canonical(f.require(key), cfg);
}

}  // namespace

KeyValueFile KeyValueFile::parse(std::string_view text) {
  KeyValueFile out;
  size_t lineno = 0;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected key=value");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty key");
    if (out.get(key)) throw ParseError("line " + std::to_string(lineno) + ": repeated key '" + key + "'");
    out.entries_.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

std::optional<std::string> KeyValueFile::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const std::string& KeyValueFile::require(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  throw ParseError("missing '" + key + "='");
}

FileHeader read_header(const KeyValueFile& f) {
  FileHeader h{parse_scheme(f.require("scheme")), parse_number<int>("base", f.require("base")),
               parse_number<int>("digits", f.require("digits"))};
  if (h.base < 2 || h.base > 36) throw ParseError("base must lie in [2, 36]");
  if (h.digits < 1) throw ParseError("digits must be positive");
  return h;
}

std::string format_public_key(const PublicKey& pk) {
  std::ostringstream out;
  out << header_lines(pk);
  if (pk.family.is_jacobi()) {
    const Modulus& k = pk.family.modulus();
    if (k.parameter_form()) {
      out << "m=" << k.parameter().to_string() << "\n";
    } else {
      out << "k=" << k.k().to_string() << "\n";
    }
  }
  out << "x=" << pk.x.to_string() << "\n"
      << "y=" << pk.y.to_string() << "\n";
  return out.str();
}

std::string format_private_key(const KeyPair& kp) {
  return format_public_key(kp.pub) + "s=" + kp.priv.s.to_string() + "\n";
}

std::string format_ciphertext(const PublicKey& pk, const Ciphertext& c) {
  return header_lines(pk) + "u=" + c.u.to_string() + "\nX=" + c.X.to_string() + "\n";
}

PublicKey parse_public_key(const KeyValueFile& f, int guard) {
  FileHeader h = read_header(f);
  PrecisionConfig cfg = PrecisionConfig::protocol(h.base, h.digits, guard);
  MapFamily family = MapFamily::chebyshev();
  if (h.scheme == Scheme::jacobi) {
    auto k = f.get("k");
    auto m = f.get("m");
    if (k.has_value() == m.has_value()) throw ParseError("jacobi key needs exactly one of 'k=' or 'm='");
    family = MapFamily::jacobi(k ? Modulus::from_k(Real::parse_canonical(*k, cfg))
                                 : Modulus::from_parameter(Real::parse_canonical(*m, cfg)));
  }
  Real x = read_real(f, "x", cfg);
  Real y = read_real(f, "y", cfg);
  if (x.abs() > Real::from_int(1, cfg)) throw DomainError("public x must satisfy |x| <= 1");
  if (y.abs() > Real::from_int(1, cfg) + cfg.epsilon()) throw DomainError("public y must satisfy |y| <= 1");
  return PublicKey{family, x, y};
}

KeyPair parse_private_key(const KeyValueFile& f, int guard) {
  PublicKey pk = parse_public_key(f, guard);
  return KeyPair{pk, PrivateKey{Index::parse(f.require("s"))}};
}

Ciphertext parse_ciphertext(const KeyValueFile& f, const PublicKey& pk) {
  FileHeader h = read_header(f);
  const PrecisionConfig& cfg = pk.x.config();
  if (h.scheme != pk.family.scheme() || h.base != cfg.base() || h.digits != cfg.digits()) {
    throw PrecisionMismatch("ciphertext header does not match the key (scheme/base/digits)");
  }
  Real u = read_real(f, "u", cfg);
  Real X = read_real(f, "X", cfg);
  if (u.abs() > Real::from_int(1, cfg) + cfg.epsilon()) throw DomainError("ciphertext u must satisfy |u| <= 1");
  return Ciphertext{u, X};
}

Scenario parse_scenario(const KeyValueFile& f) {
  if (f.empty()) throw ParseError("empty scenario");
  Scenario sc;
  sc.scheme = parse_scheme(f.require("scheme"));
  sc.seed = parse_number<std::uint64_t>("seed", f.require("seed"));
  const std::string& kind = f.require("scenario");
  if (kind == "keyagreement") {
    sc.kind = ScenarioKind::keyagreement;
  } else if (kind == "auth") {
    sc.kind = ScenarioKind::auth;
  } else {
    throw ParseError("unknown scenario '" + kind + "'");
  }
  if (auto v = f.get("rounds")) sc.rounds = parse_number<unsigned>("rounds", *v);
  auto idx = [&](const char* key) -> std::optional<Index> {
    if (auto v = f.get(key)) return Index::parse(*v);
    return std::nullopt;
  };
  sc.p = idx("p");
  sc.q = idx("q");
  sc.s = idx("s");
  sc.r = idx("r");
  sc.m = f.get("m");
  sc.x = f.get("x");
  sc.k = f.get("k");
  return sc;
}

}  // namespace chaoscheb
