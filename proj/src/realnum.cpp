#include "chaoscheb/realnum.hpp"

#include <cmath>

#include "fixed.hpp"

namespace chaoscheb {

namespace {

void require_same(const Real& a, const Real& b) {
  if (!(a.config() == b.config())) {
    throw PrecisionMismatch("operands carry different precision configurations");
  }
}

int digit_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
  return -1;
}

// Splits "[-+]int[.frac]" and validates the digits against the base.
struct Lexed {
  bool negative = false;
  std::string integer;
  std::string fraction;
};

Lexed lex(std::string_view text, int base) {
  Lexed out;
  size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    out.negative = text[i] == '-';
    ++i;
  }
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '.') {
      if (seen_point) throw ParseError("more than one '.' in real literal");
      seen_point = true;
      continue;
    }
    int d = digit_value(ch);
    if (d < 0 || d >= base) {
      throw ParseError("invalid digit '" + std::string(1, ch) + "' for base " + std::to_string(base));
    }
    char lower = static_cast<char>(d < 10 ? '0' + d : 'a' + d - 10);
    (seen_point ? out.fraction : out.integer).push_back(lower);
  }
  if (out.integer.empty() && out.fraction.empty()) throw ParseError("real literal has no digits");
  return out;
}

mpz_class digits_to_mpz(const std::string& s, int base) {
  if (s.empty()) return 0;
  return mpz_class(s, base);
}

}  // namespace

mpz_class ipow(int base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

mpz_class round_half_even(const mpz_class& p, const mpz_class& q) {
  mpz_class quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_class twice = rem << 1;
  int c = cmp(twice, q);
  if (c > 0 || (c == 0 && mpz_odd_p(quo.get_mpz_t()))) quo += 1;
  return quo;
}

// ---------------------------------------------------------------------------
// PrecisionConfig

PrecisionConfig::PrecisionConfig(int base, int digits, int guard) {
  if (base < 2 || base > 36) throw DomainError("base must lie in [2, 36]");
  if (digits < 1) throw DomainError("digit count must be positive");
  if (guard < 0) throw DomainError("guard digits must be nonnegative");
  auto d = std::make_shared<Data>();
  d->base = base;
  d->digits = digits;
  d->guard = guard;
  d->scale = ipow(base, static_cast<unsigned long>(digits));
  int e = digits >= 3 ? digits - 2 : 1;
  d->epsilon = ipow(base, static_cast<unsigned long>(digits - e));
  data_ = std::move(d);
}

PrecisionConfig PrecisionConfig::protocol(int base, int digits, int guard) {
  PrecisionConfig c(base, digits, guard);
  return c.with_epsilon_exponent(std::max(1, digits / 2));
}

PrecisionConfig PrecisionConfig::with_epsilon_exponent(int exponent) const {
  if (exponent < 1 || exponent > digits()) {
    throw DomainError("epsilon exponent must lie in [1, digits]");
  }
  auto d = std::make_shared<Data>(*data_);
  d->epsilon = ipow(base(), static_cast<unsigned long>(digits() - exponent));
  return PrecisionConfig(std::move(d));
}

PrecisionConfig PrecisionConfig::with_epsilon(const Real& eps) const {
  Real e = eps.rescale(*this);
  if (e.sign() <= 0 || cmp(e.scaled(), scale()) >= 0) throw DomainError("epsilon must satisfy 0 < eps < 1");
  auto d = std::make_shared<Data>(*data_);
  d->epsilon = e.scaled();
  return PrecisionConfig(std::move(d));
}

Real PrecisionConfig::epsilon() const { return Real(*this, data_->epsilon); }

Real PrecisionConfig::delta() const {
  int e = std::max(1, digits() / 2);
  return Real(*this, ipow(base(), static_cast<unsigned long>(digits() - e)));
}

long PrecisionConfig::working_bits(long extra_digits) const {
  double bits = static_cast<double>(digits() + guard() + extra_digits) * std::log2(static_cast<double>(base()));
  return static_cast<long>(std::ceil(bits)) + 16;
}

bool operator==(const PrecisionConfig& a, const PrecisionConfig& b) {
  if (a.data_ == b.data_) return true;
  return a.base() == b.base() && a.digits() == b.digits() && a.guard() == b.guard() &&
         cmp(a.data_->epsilon, b.data_->epsilon) == 0;
}

// ---------------------------------------------------------------------------
// Real

Real::Real(PrecisionConfig cfg) : cfg_(std::move(cfg)), m_(0) {}

Real::Real(PrecisionConfig cfg, mpz_class scaled) : cfg_(std::move(cfg)), m_(std::move(scaled)) {}

Real Real::from_int(long v, const PrecisionConfig& cfg) { return Real(cfg, mpz_class(v) * cfg.scale()); }

Real Real::from_ratio(const mpz_class& p, const mpz_class& q, const PrecisionConfig& cfg) {
  if (sgn(q) == 0) throw DegenerateInput("ratio with zero denominator");
  mpz_class n = p * cfg.scale();
  mpz_class d = q;
  if (sgn(d) < 0) {
    n = -n;
    d = -d;
  }
  return Real(cfg, round_half_even(n, d));
}

Real Real::parse(std::string_view text, const PrecisionConfig& cfg) {
  Lexed lx = lex(text, cfg.base());
  const auto nfrac = static_cast<unsigned long>(lx.fraction.size());
  mpz_class whole = digits_to_mpz(lx.integer + lx.fraction, cfg.base());
  mpz_class scaled;
  auto L = static_cast<unsigned long>(cfg.digits());
  if (nfrac <= L) {
    scaled = whole * ipow(cfg.base(), L - nfrac);
  } else {
    scaled = round_half_even(whole, ipow(cfg.base(), nfrac - L));
  }
  if (lx.negative) scaled = -scaled;
  return Real(cfg, scaled);
}

Real Real::parse_canonical(std::string_view text, const PrecisionConfig& cfg) {
  auto point = text.find('.');
  if (point == std::string_view::npos || text.size() - point - 1 != static_cast<size_t>(cfg.digits()) ||
      point == 0 || (point == 1 && (text[0] == '-' || text[0] == '+'))) {
    throw ParseError("'" + std::string(text) + "' is not a canonical " + std::to_string(cfg.digits()) +
                     "-digit real");
  }
  return parse(text, cfg);
}

std::string Real::to_string() const {
  mpz_class mag = m_;
  if (sgn(mag) < 0) mag = -mag;
  mpz_class ip, fp;
  mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), mag.get_mpz_t(), cfg_.scale().get_mpz_t());
  std::string frac = fp.get_str(cfg_.base());
  std::string out;
  if (sgn(m_) < 0) out.push_back('-');
  out += ip.get_str(cfg_.base());
  out.push_back('.');
  out.append(static_cast<size_t>(cfg_.digits()) - frac.size(), '0');
  out += frac;
  return out;
}

Real Real::rescale(const PrecisionConfig& target) const {
  if (target.base() == cfg_.base() && target.digits() == cfg_.digits()) return Real(target, m_);
  mpz_class n = m_ * target.scale();
  return Real(target, round_half_even(n, cfg_.scale()));
}

double Real::to_double() const {
  mpq_class q(m_, cfg_.scale());
  return q.get_d();
}

Real Real::operator-() const { return Real(cfg_, mpz_class(-m_)); }

Real Real::abs() const { return sgn(m_) < 0 ? -*this : *this; }

Real operator+(const Real& a, const Real& b) {
  require_same(a, b);
  return Real(a.cfg_, mpz_class(a.m_ + b.m_));
}

Real operator-(const Real& a, const Real& b) {
  require_same(a, b);
  return Real(a.cfg_, mpz_class(a.m_ - b.m_));
}

Real operator*(const Real& a, const Real& b) {
  require_same(a, b);
  mpz_class p = a.m_ * b.m_;
  return Real(a.cfg_, round_half_even(p, a.cfg_.scale()));
}

Real operator/(const Real& a, const Real& b) {
  require_same(a, b);
  if (b.is_zero()) throw DegenerateInput("division by zero");
  mpz_class n = a.m_ * a.cfg_.scale();
  mpz_class d = b.m_;
  if (sgn(d) < 0) {
    n = -n;
    d = -d;
  }
  return Real(a.cfg_, round_half_even(n, d));
}

bool operator==(const Real& a, const Real& b) {
  require_same(a, b);
  return cmp(a.m_, b.m_) == 0;
}

std::strong_ordering operator<=>(const Real& a, const Real& b) {
  require_same(a, b);
  int c = cmp(a.m_, b.m_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Real add(const Real& a, const Real& b) { return a + b; }
Real mul(const Real& a, const Real& b) { return a * b; }
Real div(const Real& a, const Real& b) { return a / b; }
Real neg(const Real& a) { return -a; }
Real abs(const Real& a) { return a.abs(); }

int compare(const Real& a, const Real& b) {
  auto o = a <=> b;
  return o < 0 ? -1 : (o > 0 ? 1 : 0);
}

bool approx_equal(const Real& a, const Real& b) {
  require_same(a, b);
  mpz_class d = a.scaled() - b.scaled();
  return cmpabs(d, a.config().epsilon_scaled()) <= 0;
}

// ---------------------------------------------------------------------------
// Transcendentals

Real pi(const PrecisionConfig& cfg) {
  long prec = cfg.working_bits();
  return detail::fx_to_real(detail::fx_pi(prec), prec, cfg);
}

namespace {

// Bits taken by the integer part of |x|.
long magnitude_bits(const Real& x) {
  mpz_class ip = x.scaled() / x.config().scale();
  return static_cast<long>(mpz_sizeinbase(ip.get_mpz_t(), 2)) + 2;
}

}  // namespace

Real cos(const Real& theta) {
  const PrecisionConfig& cfg = theta.config();
  long prec = cfg.working_bits() + magnitude_bits(theta);
  detail::Kernel k(prec);
  return detail::fx_to_real(k.cos(detail::fx_from_real(theta, prec)), prec, cfg);
}

Real sin(const Real& theta) {
  const PrecisionConfig& cfg = theta.config();
  long prec = cfg.working_bits() + magnitude_bits(theta);
  detail::Kernel k(prec);
  return detail::fx_to_real(k.sin(detail::fx_from_real(theta, prec)), prec, cfg);
}

Real arccos(const Real& v) {
  const PrecisionConfig& cfg = v.config();
  if (cmpabs(v.scaled(), cfg.scale()) > 0) throw DomainError("arccos argument outside [-1, 1]");
  long prec = cfg.working_bits();
  detail::Kernel k(prec);
  return detail::fx_to_real(k.acos(detail::fx_from_real(v, prec)), prec, cfg);
}

Real sqrt(const Real& v) {
  if (v.sign() < 0) throw DomainError("square root of a negative value");
  // round(sqrt(m * B^L)); no ties are possible for integer radicands.
  mpz_class n = v.scaled() * v.config().scale();
  mpz_class s, rem;
  mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (cmp(rem, s) > 0) s += 1;
  return Real(v.config(), s);
}

mpz_class frac_scaled(const Real& a) { return frac_scaled(a, a.config().digits()); }

mpz_class frac_scaled(const Real& a, int digits) {
  const PrecisionConfig& cfg = a.config();
  mpz_class f;
  mpz_fdiv_r(f.get_mpz_t(), a.scaled().get_mpz_t(), cfg.scale().get_mpz_t());
  mpz_class target = ipow(cfg.base(), static_cast<unsigned long>(digits));
  mpz_class n = f * target;
  mpz_class r = round_half_even(n, cfg.scale());
  if (cmp(r, target) >= 0) r -= target;
  return r;
}

}  // namespace chaoscheb
