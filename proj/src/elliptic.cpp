#include "chaoscheb/elliptic.hpp"

#include "chaoscheb/chebyshev.hpp"
#include "fixed.hpp"

namespace chaoscheb {

namespace {

long elliptic_prec(const PrecisionConfig& cfg, long extra_bits = 0) {
  return cfg.working_bits(cfg.digits() / 2) + extra_bits + 8;
}

void check_k_bound(const Real& k) {
  const PrecisionConfig& cfg = k.config();
  Real one = Real::from_int(1, cfg);
  if (k.sign() < 0) throw DomainError("modulus k must be nonnegative");
  if (k > one - cfg.delta()) throw DomainError("modulus k must satisfy k <= 1 - B^-(L/2)");
}

long magnitude_bits(const Real& v) {
  mpz_class ip = v.scaled() / v.config().scale();
  return static_cast<long>(mpz_sizeinbase(ip.get_mpz_t(), 2)) + 2;
}

void check_unit(const Real& v, const char* what) {
  if (cmpabs(v.scaled(), v.config().scale()) > 0) throw DomainError(std::string(what) + " needs |v| <= 1");
}

}  // namespace

Modulus Modulus::from_k(const Real& k) {
  check_k_bound(k);
  auto s = std::make_shared<State>(k, k * k, false);
  return Modulus(std::move(s));
}

Modulus Modulus::from_parameter(const Real& m) {
  if (m.sign() < 0) throw DomainError("elliptic parameter must be nonnegative");
  Real k = sqrt(m);
  check_k_bound(k);
  auto s = std::make_shared<State>(k, m, true);
  return Modulus(std::move(s));
}

Real Modulus::k_prime() const {
  Real one = Real::from_int(1, config());
  return sqrt(one - parameter());
}

mpz_class Modulus::parameter_fixed(long prec) const {
  if (state_->parameter_form) return detail::fx_from_real(state_->m, prec);
  mpz_class kf = detail::fx_from_real(state_->k, prec);
  return detail::fx_mul(kf, kf, prec);
}

const Real& Modulus::quarter_period() const {
  std::call_once(state_->once, [this] {
    const PrecisionConfig& cfg = config();
    long prec = elliptic_prec(cfg);
    detail::Kernel kern(prec);
    detail::EllipticFx e(parameter_fixed(prec), kern);
    state_->K = detail::fx_to_real(e.quarter_period(), prec, cfg);
  });
  return *state_->K;
}

AgmState agm(const Real& a0, const Real& b0) {
  const PrecisionConfig& cfg = a0.config();
  if (b0.sign() <= 0) throw DomainError("agm needs b0 > 0");
  if (a0 < b0) throw DomainError("agm needs a0 >= b0");
  long prec = cfg.working_bits();
  mpz_class af = detail::fx_from_real(a0, prec);
  mpz_class bf = detail::fx_from_real(b0.rescale(cfg), prec);
  mpz_class c0 = detail::fx_sqrt(detail::fx_mul(af, af, prec) - detail::fx_mul(bf, bf, prec), prec);
  mpz_class stop = detail::fx_from_real(Real(cfg, 1), prec);
  detail::AgmFx st = detail::agm_fx(af, bf, c0, stop, prec);
  AgmState out;
  for (size_t j = 0; j < st.a.size(); ++j) {
    out.a.push_back(detail::fx_to_real(st.a[j], prec, cfg));
    out.b.push_back(detail::fx_to_real(st.b[j], prec, cfg));
    out.c.push_back(detail::fx_to_real(st.c[j], prec, cfg));
  }
  return out;
}

Real quarter_period(const Modulus& k) { return k.quarter_period(); }

Real cn(const Real& omega, const Modulus& k) {
  const PrecisionConfig& cfg = omega.config();
  long prec = elliptic_prec(cfg, magnitude_bits(omega));
  detail::Kernel kern(prec);
  detail::EllipticFx e(k.parameter_fixed(prec), kern);
  return detail::fx_to_real(e.cn(detail::fx_from_real(omega, prec)), prec, cfg);
}

Real sn(const Real& omega, const Modulus& k) {
  const PrecisionConfig& cfg = omega.config();
  long prec = elliptic_prec(cfg, magnitude_bits(omega));
  detail::Kernel kern(prec);
  detail::EllipticFx e(k.parameter_fixed(prec), kern);
  mpz_class s, c;
  e.sn_cn(detail::fx_from_real(omega, prec), s, c);
  return detail::fx_to_real(s, prec, cfg);
}

Real cn_inverse(const Real& v, const Modulus& k) {
  check_unit(v, "cn_inverse");
  const PrecisionConfig& cfg = v.config();
  long prec = elliptic_prec(cfg);
  detail::Kernel kern(prec);
  detail::EllipticFx e(k.parameter_fixed(prec), kern);
  return detail::fx_to_real(e.cn_inverse(detail::fx_from_real(v, prec)), prec, cfg);
}

Real jacobi_map_recurrence(const Index& p, const Real& omega, const Modulus& k) {
  if (p > Index(kLinearLimit)) throw DomainError("jacobi_map_recurrence is limited to p <= 10^6");
  const PrecisionConfig& cfg = omega.config();
  long prec = elliptic_prec(cfg, 2 * detail::index_bits(p));
  mpz_class v = detail::jacobi_recurrence_fx(p.to_u64(), detail::fx_from_real(omega, prec),
                                             k.parameter_fixed(prec), prec);
  return detail::fx_to_real(v, prec, cfg);
}

Real jacobi_map(const Index& p, const Real& omega, const Modulus& k) {
  check_unit(omega, "jacobi_map");
  const PrecisionConfig& cfg = omega.config();
  long prec = elliptic_prec(cfg, detail::index_bits(p));
  detail::Kernel kern(prec);
  detail::EllipticFx e(k.parameter_fixed(prec), kern);
  return detail::fx_to_real(e.jacobi_map(p, detail::fx_from_real(omega, prec)), prec, cfg);
}

}  // namespace chaoscheb
