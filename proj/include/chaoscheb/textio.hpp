#pragma once

// Line-oriented key=value text formats for keys, ciphertexts and scenarios.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaoscheb/cryptosystem.hpp"

namespace chaoscheb {

class KeyValueFile {
 public:
  // Blank lines and lines starting with '#' are skipped. ParseError on a line
  // without '=', an empty key, or a repeated key.
  static KeyValueFile parse(std::string_view text);

  std::optional<std::string> get(const std::string& key) const;
  // ParseError when absent.
  const std::string& require(const std::string& key) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Header shared by every key and ciphertext file.
struct FileHeader {
  Scheme scheme;
  int base;
  int digits;
};

FileHeader read_header(const KeyValueFile& f);

std::string format_public_key(const PublicKey& pk);
std::string format_private_key(const KeyPair& kp);
std::string format_ciphertext(const PublicKey& pk, const Ciphertext& c);

// `guard` sets the guard digits of the resulting config; epsilon follows
// PrecisionConfig::protocol.
PublicKey parse_public_key(const KeyValueFile& f, int guard = PrecisionConfig::kDefaultGuard);
// Public part plus s.
KeyPair parse_private_key(const KeyValueFile& f, int guard = PrecisionConfig::kDefaultGuard);
// PrecisionMismatch when the header disagrees with the key.
Ciphertext parse_ciphertext(const KeyValueFile& f, const PublicKey& pk);

enum class ScenarioKind { keyagreement, auth };

struct Scenario {
  Scheme scheme = Scheme::chebyshev;
  std::uint64_t seed = 0;
  ScenarioKind kind = ScenarioKind::keyagreement;
  unsigned rounds = 1;
  std::optional<Index> p, q, s, r;
  // Raw strings; parsed once the precision is known.
  std::optional<std::string> m, x, k;
};

// Requires scheme=, seed= and scenario=. ParseError otherwise.
Scenario parse_scenario(const KeyValueFile& f);

}  // namespace chaoscheb
