#include "fixed.hpp"

#include <cmath>

namespace chaoscheb::detail {

namespace {

// floor(a / 2^s) rounded to nearest (ties up).
mpz_class shr_round(const mpz_class& a, long s) {
  if (s <= 0) return a << static_cast<unsigned long>(-s);
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  if (mpz_tstbit(a.get_mpz_t(), static_cast<mp_bitcnt_t>(s - 1))) q += 1;
  return q;
}

}  // namespace

mpz_class fx_one(long prec) {
  mpz_class one = 1;
  return one << static_cast<unsigned long>(prec);
}

mpz_class fx_mul(const mpz_class& a, const mpz_class& b, long prec) {
  mpz_class p = a * b;
  return shr_round(p, prec);
}

mpz_class fx_div(const mpz_class& a, const mpz_class& b, long prec) {
  if (sgn(b) == 0) throw DegenerateInput("fixed-point division by zero");
  mpz_class n = a << static_cast<unsigned long>(prec);
  mpz_class d = b;
  if (sgn(d) < 0) {
    n = -n;
    d = -d;
  }
  return round_half_even(n, d);
}

mpz_class fx_sqrt(const mpz_class& a, long prec) {
  if (sgn(a) < 0) throw DomainError("square root of a negative value");
  mpz_class n = a << static_cast<unsigned long>(prec);
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class fx_shift(const mpz_class& a, long from_prec, long to_prec) {
  if (to_prec >= from_prec) return a << static_cast<unsigned long>(to_prec - from_prec);
  return shr_round(a, from_prec - to_prec);
}

mpz_class fx_from_real(const Real& r, long prec) {
  mpz_class n = r.scaled() << static_cast<unsigned long>(prec);
  return round_half_even(n, r.config().scale());
}

Real fx_to_real(const mpz_class& a, long prec, const PrecisionConfig& cfg) {
  mpz_class n = a * cfg.scale();
  return Real(cfg, round_half_even(n, fx_one(prec)));
}

mpz_class fx_from_double(double d, long prec) {
  int e = 0;
  double f = std::frexp(d, &e);  // d = f * 2^e, |f| in [0.5, 1)
  mpz_class m;
  mpz_set_d(m.get_mpz_t(), std::ldexp(f, 53));
  long shift = prec + e - 53;
  if (shift >= 0) return m << static_cast<unsigned long>(shift);
  return shr_round(m, -shift);
}

double fx_to_double(const mpz_class& a, long prec) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, a.get_mpz_t());
  return std::ldexp(d, static_cast<int>(e - prec));
}

mpz_class fx_abs(const mpz_class& a) { return sgn(a) < 0 ? mpz_class(-a) : a; }

mpz_class fx_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

long index_bits(const Index& n) { return static_cast<long>(n.bit_length()) + 1; }

mpz_class fx_pi(long prec) {
  const long p = prec + 16;
  const mpz_class one = fx_one(p);
  mpz_class a = one;
  mpz_class b = fx_sqrt(one >> 1, p);
  mpz_class t = one >> 2;
  mpz_class pw = 1;
  for (int i = 0; i < 64; ++i) {
    mpz_class an = (a + b) >> 1;
    mpz_class bn = fx_sqrt(fx_mul(a, b, p), p);
    mpz_class d = a - an;
    t -= pw * fx_mul(d, d, p);
    a = an;
    b = bn;
    pw <<= 1;
    mpz_class gap = a - b;
    if (cmpabs(gap, 4) <= 0) break;
  }
  mpz_class s = a + b;
  mpz_class v = fx_div(fx_mul(s, s, p), t << 2, p);
  return fx_shift(v, p, prec);
}

Kernel::Kernel(long prec) : prec_(prec), one_(fx_one(prec)) {}

const mpz_class& Kernel::pi() const {
  if (!pi_) {
    pi_hi_ = fx_pi(prec_ + kPiExtra);
    pi_ = fx_shift(*pi_hi_, prec_ + kPiExtra, prec_);
  }
  return *pi_;
}

void Kernel::sin_cos(const mpz_class& t, mpz_class& s, mpz_class& c) const {
  ++sin_cos_calls_;
  pi();
  // Reduction and the series run kExt bits above prec_; the doubling steps
  // below cost kHalvings bits.
  constexpr long kHalvings = 8;
  constexpr long kExt = kPiExtra;
  const long p = prec_ + kExt;
  const mpz_class one = fx_one(p);
  const mpz_class te = t << static_cast<unsigned long>(kExt);
  const mpz_class hp = *pi_hi_ >> 1;

  mpz_class q = round_half_even(te, hp);
  mpz_class r = te - q * hp;

  mpz_class x = r >> static_cast<unsigned long>(kHalvings);
  mpz_class x2 = fx_mul(x, x, p);
  mpz_class sn = x, cs = one;
  mpz_class term_s = x, term_c = one;
  for (unsigned long k = 1; k < 100000; ++k) {
    term_s = fx_mul(term_s, x2, p);
    term_s /= (2 * k) * (2 * k + 1);
    term_s = -term_s;
    term_c = fx_mul(term_c, x2, p);
    term_c /= (2 * k - 1) * (2 * k);
    term_c = -term_c;
    if (sgn(term_s) == 0 && sgn(term_c) == 0) break;
    sn += term_s;
    cs += term_c;
  }
  for (long i = 0; i < kHalvings; ++i) {
    mpz_class s2 = fx_mul(sn, cs, p) << 1;
    mpz_class c2 = one - (fx_mul(sn, sn, p) << 1);
    sn = s2;
    cs = c2;
  }
  mpz_class quad = fx_mod(q, 4);
  switch (quad.get_si()) {
    case 0: s = sn; c = cs; break;
    case 1: s = cs; c = -sn; break;
    case 2: s = -sn; c = -cs; break;
    default: s = -cs; c = sn; break;
  }
  s = fx_shift(s, p, prec_);
  c = fx_shift(c, p, prec_);
}

mpz_class Kernel::cos(const mpz_class& t) const {
  mpz_class s, c;
  sin_cos(t, s, c);
  return c;
}

mpz_class Kernel::sin(const mpz_class& t) const {
  mpz_class s, c;
  sin_cos(t, s, c);
  return s;
}

mpz_class Kernel::atan2(const mpz_class& y, const mpz_class& x) const {
  if (sgn(y) == 0 && sgn(x) == 0) return 0;
  if (sgn(y) == 0) return sgn(x) > 0 ? mpz_class(0) : pi();
  if (sgn(x) == 0) return sgn(y) > 0 ? half_pi() : mpz_class(-half_pi());

  // Seed from doubles after normalising both components together.
  size_t by = mpz_sizeinbase(y.get_mpz_t(), 2);
  size_t bx = mpz_sizeinbase(x.get_mpz_t(), 2);
  long top = static_cast<long>(std::max(by, bx));
  double yd = fx_to_double(y, top);
  double xd = fx_to_double(x, top);
  mpz_class t = fx_from_double(std::atan2(yd, xd), prec_);

  // Newton on f(t) = x sin t - y cos t, f'(t) = x cos t + y sin t.
  // Normalise (x, y) so that f' is near 1 and the step is well scaled.
  mpz_class xn = x, yn = y;
  long shift = top - prec_;
  if (shift > 0) {
    xn = fx_shift(x, prec_ + shift, prec_);
    yn = fx_shift(y, prec_ + shift, prec_);
  } else if (shift < 0) {
    xn = x << static_cast<unsigned long>(-shift);
    yn = y << static_cast<unsigned long>(-shift);
  }
  for (int it = 0; it < 64; ++it) {
    mpz_class s, c;
    sin_cos(t, s, c);
    mpz_class f = mul(xn, s) - mul(yn, c);
    mpz_class fp = mul(xn, c) + mul(yn, s);
    mpz_class dt = div(f, fp);
    t -= dt;
    if (cmpabs(dt, 4) <= 0) break;
  }
  // Keep the result in (-pi, pi].
  const mpz_class& p = pi();
  if (cmp(t, p) > 0) t -= p << 1;
  if (cmp(t, -p) <= 0) t += p << 1;
  return t;
}

mpz_class Kernel::acos(const mpz_class& v) const {
  if (cmp(v, one_) >= 0) return 0;
  if (cmp(v, -one_) <= 0) return pi();
  mpz_class w = mul(one_ - v, one_ + v);
  return atan2(sqrt(w), v);
}

mpz_class Kernel::asin(const mpz_class& v) const {
  if (cmp(v, one_) >= 0) return half_pi();
  if (cmp(v, -one_) <= 0) return -half_pi();
  mpz_class w = mul(one_ - v, one_ + v);
  return atan2(v, sqrt(w));
}

mpz_class cheb_halving_fx(const Index& n, const mpz_class& x, long prec, unsigned long* steps) {
  const mpz_class one = fx_one(prec);
  // (lo, hi) = (T_m, T_{m+1}); the bits of n are consumed from the top.
  mpz_class lo = one, hi = x;
  const unsigned long bits = n.bit_length();
  for (unsigned long i = bits; i-- > 0;) {
    mpz_class cross = (fx_mul(lo, hi, prec) << 1) - x;
    if (n.bit(i)) {
      hi = (fx_mul(hi, hi, prec) << 1) - one;
      lo = cross;
    } else {
      lo = (fx_mul(lo, lo, prec) << 1) - one;
      hi = cross;
    }
  }
  if (steps != nullptr) *steps = bits;
  return lo;
}

mpz_class cheb_linear_fx(std::uint64_t n, const mpz_class& x, long prec) {
  const mpz_class one = fx_one(prec);
  if (n == 0) return one;
  mpz_class prev = one, cur = x;
  const mpz_class two_x = x << 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    mpz_class next = fx_mul(two_x, cur, prec) - prev;
    prev.swap(cur);
    cur.swap(next);
  }
  return cur;
}

mpz_class cheb_trig_fx(const Index& n, const mpz_class& x, const Kernel& k) {
  mpz_class theta = k.acos(x);
  mpz_class phase = theta * n.value();
  return k.cos(phase);
}

AgmFx agm_fx(const mpz_class& a0, const mpz_class& b0, const mpz_class& c0, const mpz_class& stop,
             long prec) {
  AgmFx st;
  st.a.push_back(a0);
  st.b.push_back(b0);
  st.c.push_back(c0);
  for (int j = 0; j < 200; ++j) {
    const mpz_class& a = st.a.back();
    const mpz_class& b = st.b.back();
    mpz_class an = (a + b) >> 1;
    mpz_class bn = fx_sqrt(fx_mul(a, b, prec), prec);
    mpz_class cn = (a - b) >> 1;
    st.a.push_back(std::move(an));
    st.b.push_back(std::move(bn));
    st.c.push_back(std::move(cn));
    if (cmp(st.c.back(), stop) <= 0 || cmp(st.a.back(), st.b.back()) == 0) break;
  }
  return st;
}

namespace {

AgmFx modulus_agm(const mpz_class& m, const Kernel& k) {
  const mpz_class& one = k.one();
  if (sgn(m) < 0 || cmp(m, one) >= 0) throw DomainError("elliptic parameter must satisfy 0 <= k < 1");
  mpz_class kp = k.sqrt(one - m);
  mpz_class kk = k.sqrt(m);
  return agm_fx(one, kp, kk, mpz_class(4), k.prec());
}

}  // namespace

EllipticFx::EllipticFx(const mpz_class& m, const Kernel& k) : kern(k), agm(modulus_agm(m, k)) {
  // 4K = 2 pi / a_n.
  period = k.div(k.two_pi(), agm.a.back());
}

void EllipticFx::sn_cn(const mpz_class& u, mpz_class& sn, mpz_class& cn) const {
  const int n = agm.steps();
  mpz_class ur = fx_mod(u, period);
  mpz_class phi = kern.mul(ur, agm.a.back()) << static_cast<unsigned long>(n);
  // Descent: sin(2 phi_{j-1} - phi_j) = (c_j / a_j) sin(phi_j), principal branch.
  for (int j = n; j >= 1; --j) {
    if (sgn(agm.c[j]) == 0) {
      phi >>= 1;
      continue;
    }
    mpz_class ratio = kern.div(agm.c[j], agm.a[j]);
    mpz_class s = kern.mul(ratio, kern.sin(phi));
    phi = (phi + kern.asin(s)) >> 1;
  }
  kern.sin_cos(phi, sn, cn);
}

mpz_class EllipticFx::cn(const mpz_class& u) const {
  mpz_class s, c;
  sn_cn(u, s, c);
  return c;
}

mpz_class EllipticFx::cn_inverse(const mpz_class& v) const {
  const int n = agm.steps();
  mpz_class gamma = kern.acos(v);
  const mpz_class two_pi = kern.two_pi();
  // Ascent: tan(g_{j+1} - g_j) = (b_j / a_j) tan(g_j), continuous branch.
  for (int j = 0; j < n; ++j) {
    mpz_class s, c;
    kern.sin_cos(gamma, s, c);
    mpz_class delta = kern.atan2(kern.mul(agm.b[j], s), kern.mul(agm.a[j], c));
    mpz_class turns = round_half_even(mpz_class(gamma - delta), two_pi);
    delta += turns * two_pi;
    gamma += delta;
  }
  mpz_class denom = agm.a.back() << static_cast<unsigned long>(n);
  return kern.div(gamma, denom);
}

mpz_class EllipticFx::jacobi_map(const Index& p, const mpz_class& omega) const {
  mpz_class theta = cn_inverse(omega);
  return cn(mpz_class(theta * p.value()));
}

mpz_class jacobi_recurrence_fx(std::uint64_t p, const mpz_class& omega, const mpz_class& m, long prec) {
  const mpz_class one = fx_one(prec);
  if (p == 0) return one;
  const mpz_class w2c = one - fx_mul(omega, omega, prec);
  const mpz_class mw = fx_mul(m, w2c, prec);
  const mpz_class two_w = omega << 1;
  mpz_class prev = one, cur = omega;
  for (std::uint64_t i = 1; i < p; ++i) {
    mpz_class den = one - fx_mul(mw, mpz_class(one - fx_mul(cur, cur, prec)), prec);
    if (sgn(den) <= 0) throw PrecisionBreakdown("rational map recurrence denominator vanished");
    mpz_class next = fx_mul(fx_div(two_w, den, prec), cur, prec) - prev;
    prev.swap(cur);
    cur.swap(next);
  }
  return cur;
}

}  // namespace chaoscheb::detail
