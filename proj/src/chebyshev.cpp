#include "chaoscheb/chebyshev.hpp"

#include <cmath>

#include "fixed.hpp"

namespace chaoscheb {

namespace {

long halving_prec(const Index& n, const PrecisionConfig& cfg) {
  return cfg.working_bits() + detail::index_bits(n) + 8;
}

}  // namespace

Real cheb_linear(const Index& n, const Real& x) {
  if (n > Index(kLinearLimit)) throw DomainError("cheb_linear is limited to n <= 10^6");
  const PrecisionConfig& cfg = x.config();
  long prec = cfg.working_bits() + 2 * detail::index_bits(n);
  mpz_class v = detail::cheb_linear_fx(n.to_u64(), detail::fx_from_real(x, prec), prec);
  return detail::fx_to_real(v, prec, cfg);
}

Real cheb_halving(const Index& n, const Real& x, unsigned long* steps) {
  const PrecisionConfig& cfg = x.config();
  long prec = halving_prec(n, cfg);
  mpz_class v = detail::cheb_halving_fx(n, detail::fx_from_real(x, prec), prec, steps);
  return detail::fx_to_real(v, prec, cfg);
}

Real cheb_trig(const Index& n, const Real& x) {
  const PrecisionConfig& cfg = x.config();
  if (cmpabs(x.scaled(), cfg.scale()) > 0) throw DomainError("cheb_trig needs |x| <= 1");
  long prec = halving_prec(n, cfg);
  detail::Kernel k(prec);
  mpz_class v = detail::cheb_trig_fx(n, detail::fx_from_real(x, prec), k);
  return detail::fx_to_real(v, prec, cfg);
}

Real semigroup_check(const Index& r, const Index& s, const Real& x, const Index& max_index) {
  const Index rs = r * s;
  if (rs > max_index) throw PrecisionBreakdown("r*s = " + rs.to_string() + " exceeds max_index");
  const PrecisionConfig& cfg = x.config();
  long prec = halving_prec(rs, cfg);
  mpz_class xf = detail::fx_from_real(x, prec);
  mpz_class rs_fx = detail::cheb_halving_fx(s, xf, prec);
  rs_fx = detail::cheb_halving_fx(r, rs_fx, prec);
  mpz_class sr_fx = detail::cheb_halving_fx(r, xf, prec);
  sr_fx = detail::cheb_halving_fx(s, sr_fx, prec);
  Real direct = detail::fx_to_real(detail::cheb_halving_fx(rs, xf, prec), prec, cfg);
  Real composed = detail::fx_to_real(rs_fx, prec, cfg);
  Real commuted = detail::fx_to_real(sr_fx, prec, cfg);
  if (!approx_equal(direct, composed) || !approx_equal(direct, commuted)) {
    throw PrecisionBreakdown("semi-group identity fails: T_rs=" + direct.to_string() +
                             " T_r(T_s)=" + composed.to_string() + " T_s(T_r)=" + commuted.to_string());
  }
  return direct;
}

Index default_max_index(const PrecisionConfig& cfg) {
  double bits = static_cast<double>(cfg.digits()) * std::log2(static_cast<double>(cfg.base()));
  auto e = static_cast<unsigned long>(std::floor(970.0 * bits / 2048.0));
  return Index::pow2(std::max(1ul, e));
}

}  // namespace chaoscheb
