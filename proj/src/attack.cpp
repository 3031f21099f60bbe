#include "chaoscheb/attack.hpp"

#include <algorithm>

#include "chaoscheb/chebyshev.hpp"
#include "fixed.hpp"

namespace chaoscheb {

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class ceil_div(const mpz_class& p, const mpz_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

// Smallest x >= 0 with (a x mod m) in [l, h], given 0 < l <= h < m.
std::optional<mpz_class> homog(const mpz_class& a_in, const mpz_class& m, const mpz_class& l, const mpz_class& h) {
  mpz_class a = mod(a_in, m);
  if (sgn(a) == 0) return std::nullopt;
  mpz_class x = ceil_div(l, a);
  if (cmp(mpz_class(a * x), h) <= 0) return x;
  auto y = homog(mod(m, a), a, mod(mpz_class(-h), a), mod(mpz_class(-l), a));
  if (!y) return std::nullopt;
  return ceil_div(mpz_class(l + m * *y), a);
}

bool negligible(const Real& v) { return cmpabs(v.scaled(), v.config().epsilon_scaled()) <= 0; }

// Everything recover_index needs, in fixed point at `prec`.
struct Geometry {
  long prec = 0;
  mpz_class one;
  mpz_class theta_x;
  mpz_class a;
  mpz_class b;
  mpz_class unc_a;  // uncertainty of a from the rounding of y
  mpz_class tol;    // integrality tolerance
  mpz_class M;
  Index max_index;
  std::optional<AttackParams> params;
};

Geometry build_geometry(const MapFamily& family, const Real& x, const Real& y, const AttackOptions& opts,
                        long extra_bits) {
  const PrecisionConfig& cfg = x.config();
  const Real one_r = Real::from_int(1, cfg);
  if (x.abs() > one_r - cfg.delta()) throw DomainError("attack needs |x| <= 1 - delta");
  if (y.abs() > one_r + cfg.epsilon()) throw DomainError("observed value must satisfy |y| <= 1");
  const int lc = opts.congruence_digits > 0 ? opts.congruence_digits : cfg.digits();

  Geometry g;
  g.M = ipow(cfg.base(), static_cast<unsigned long>(lc));
  g.max_index = opts.max_index ? *opts.max_index : default_max_index(cfg);
  long m_bits = static_cast<long>(mpz_sizeinbase(g.M.get_mpz_t(), 2));
  g.prec = cfg.working_bits(cfg.digits() / 2) + std::max<long>(detail::index_bits(g.max_index), m_bits) + 16 +
           extra_bits;
  const long P = g.prec;
  g.one = detail::fx_one(P);

  detail::Kernel kern(P);
  std::optional<detail::EllipticFx> ell;
  if (family.is_jacobi()) ell.emplace(family.modulus().parameter_fixed(P), kern);
  auto theta = [&](const mpz_class& v) {
    mpz_class c = v;
    if (cmp(c, g.one) > 0) c = g.one;
    if (cmp(c, mpz_class(-g.one)) < 0) c = -g.one;
    return ell ? ell->cn_inverse(c) : kern.acos(c);
  };
  const mpz_class period = ell ? ell->period : kern.two_pi();

  const mpz_class yf = detail::fx_from_real(y, P);
  g.theta_x = theta(detail::fx_from_real(x, P));
  if (sgn(g.theta_x) == 0) throw DegenerateInput("theta(x) vanishes");
  const mpz_class ty = theta(yf);
  g.a = kern.div(ty, g.theta_x);
  g.b = kern.div(period, g.theta_x);

  const mpz_class half_ulp = detail::fx_from_real(Real(cfg, 1), P - 1);
  mpz_class dt = std::max(detail::fx_abs(theta(yf + half_ulp) - ty), detail::fx_abs(theta(yf - half_ulp) - ty));
  g.unc_a = kern.div(dt, g.theta_x);

  const mpz_class ulp = detail::fx_from_real(Real(cfg, 1), P);
  const mpz_class eps = detail::fx_from_real(cfg.epsilon(), P);
  // Angle spread of the epsilon band around y; grows like sqrt(eps) near +-1.
  mpz_class de = std::max(detail::fx_abs(theta(yf + eps) - ty), detail::fx_abs(theta(yf - eps) - ty));
  g.tol = std::max(mpz_class(10 * ulp + 2 * g.unc_a), kern.div(de, g.theta_x));

  auto scaled_frac = [&](const mpz_class& v) {
    mpz_class f = detail::fx_mod(v, g.one);
    mpz_class r = round_half_even(mpz_class(f * g.M), g.one);
    if (cmp(r, g.M) >= 0) r -= g.M;
    return r;
  };
  PrecisionConfig ccfg(cfg.base(), lc, cfg.guard());
  g.params = AttackParams{detail::fx_to_real(g.a, P, ccfg), detail::fx_to_real(g.b, P, ccfg), scaled_frac(g.a),
                          scaled_frac(g.b), g.M};
  return g;
}

class Search {
 public:
  Search(const MapFamily& family, const Real& x, const Real& y, const Geometry& g)
      : family_(family), x_(x), y_(y), g_(g) {}

  // ±a + k b rounded to the nearest integer, if it is within tolerance of one.
  std::optional<Index> integral(Branch br, const mpz_class& k) const {
    mpz_class r = (br == Branch::plus ? g_.a : mpz_class(-g_.a)) + k * g_.b;
    mpz_class R = round_half_even(r, g_.one);
    if (sgn(R) <= 0) return std::nullopt;
    mpz_class dev = r - R * g_.one;
    if (cmpabs(dev, g_.tol) > 0) return std::nullopt;
    return Index(R);
  }

  std::optional<Real> verify(const Index& R) {
    ++tried_;
    Real res = (family_.eval(R, x_) - y_).abs();
    if (!best_ || res < *best_) best_ = res;
    if (negligible(res)) return res;
    return std::nullopt;
  }

  // r'(k) exceeds `limit` (an integer).
  bool beyond(Branch br, const mpz_class& k, const mpz_class& limit) const {
    mpz_class r = (br == Branch::plus ? g_.a : mpz_class(-g_.a)) + k * g_.b;
    return cmp(r, mpz_class(limit * g_.one)) > 0;
  }

  const std::optional<Real>& best() const { return best_; }
  std::size_t tried() const { return tried_; }

 private:
  const MapFamily& family_;
  const Real& x_;
  const Real& y_;
  const Geometry& g_;
  std::optional<Real> best_;
  std::size_t tried_ = 0;
};

std::vector<Branch> branch_order(BranchChoice c) {
  switch (c) {
    case BranchChoice::plus_only: return {Branch::plus};
    case BranchChoice::minus_only: return {Branch::minus};
    default: return {Branch::plus, Branch::minus};
  }
}

std::optional<CongruenceSolution> try_solve(const mpz_class& b, const mpz_class& a, const mpz_class& M) {
  try {
    return solve_congruence(b, a, M);
  } catch (const NoSolution&) {
    return std::nullopt;
  }
}

// Right-hand side of b' k = rhs for a branch: +a needs -a', -a needs a'.
mpz_class branch_rhs(Branch br, const AttackParams& p) {
  return br == Branch::plus ? mod(mpz_class(-p.a_prime), p.modulus) : p.a_prime;
}

}  // namespace

std::vector<mpz_class> CongruenceSolution::all(std::size_t cap) const {
  std::vector<mpz_class> out;
  const mpz_class st = step();
  mpz_class k = x0;
  for (mpz_class j = 0; cmp(j, d) < 0 && out.size() < cap; ++j) {
    out.push_back(k);
    k += st;
  }
  return out;
}

CongruenceSolution solve_congruence(const mpz_class& b_prime, const mpz_class& a_prime, const mpz_class& modulus) {
  if (cmp(modulus, 2) < 0) throw DomainError("congruence modulus must be at least 2");
  const mpz_class b = mod(b_prime, modulus);
  const mpz_class a = mod(a_prime, modulus);
  mpz_class d, s, t;
  mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b.get_mpz_t(), modulus.get_mpz_t());
  if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
    throw NoSolution("gcd " + d.get_str() + " does not divide " + a.get_str());
  }
  CongruenceSolution sol{modulus, d, 0};
  sol.x0 = mod(mpz_class(s * (a / d)), mpz_class(modulus / d));
  return sol;
}

std::optional<mpz_class> first_hit(const mpz_class& a, const mpz_class& c, const mpz_class& m, const mpz_class& lo,
                                   const mpz_class& hi) {
  const mpz_class cr = mod(c, m);
  if (cmp(lo, cr) <= 0 && cmp(cr, hi) <= 0) return mpz_class(0);
  return homog(a, m, mod(mpz_class(lo - cr), m), mod(mpz_class(hi - cr), m));
}

std::string to_string(Branch b) { return b == Branch::plus ? "+a" : "-a"; }

std::string to_string(Method m) {
  switch (m) {
    case Method::congruence: return "congruence";
    case Method::direct_scan: return "direct_scan";
    default: return "windowed";
  }
}

AttackParams attack_params(const MapFamily& family, const Real& x, const Real& y, const AttackOptions& opts) {
  return *build_geometry(family, x, y, opts, 0).params;
}

RecoveredIndex recover_index(const MapFamily& family, const Real& x, const Real& y, const AttackOptions& opts) {
  const Geometry g = build_geometry(family, x, y, opts, 0);
  const AttackParams& p = *g.params;
  Search search(family, x, y, g);
  const auto order = branch_order(opts.branches);
  const std::size_t cap = opts.candidate_cap;

  RecoveredIndex out{Index(0), Branch::plus, 0, Real(x.config()), Method::congruence, p, {}, {}, 0};
  auto plus = try_solve(p.b_prime, branch_rhs(Branch::plus, p), p.modulus);
  if (plus) {
    out.plus_solutions = plus->all(16);
    for (const auto& k : out.plus_solutions) out.minus_solutions.push_back(mod(mpz_class(p.modulus - k), p.modulus));
  }
  auto found = [&](Branch br, const mpz_class& k, const Index& R, const Real& res, Method m) {
    out.r_prime = R;
    out.branch = br;
    out.k_used = k;
    out.residual = res;
    out.method = m;
    out.candidates_tried = search.tried();
    return out;
  };

  if (sgn(p.b_prime) == 0 && sgn(p.a_prime) != 0) {
    for (Branch br : order) {
      for (mpz_class k = 0; cmp(k, cap) < 0; ++k) {
        auto R = search.integral(br, k);
        if (!R) continue;
        if (auto res = search.verify(*R)) return found(br, k, *R, *res, Method::direct_scan);
      }
    }
  } else if (plus) {
    for (Branch br : order) {
      CongruenceSolution sol = br == Branch::plus ? *plus : solve_congruence(p.b_prime, p.a_prime, p.modulus);
      mpz_class count = sol.d;
      if (cmp(count, cap) > 0) count = cap;
      for (mpz_class j = 0; cmp(j, count) < 0; ++j) {
        mpz_class k = sol.at(j);
        auto R = search.integral(br, k);
        if (!R) continue;
        if (auto res = search.verify(*R)) return found(br, k, *R, *res, Method::congruence);
      }
    }
  }

  if (opts.windowed_fallback) {
    const mpz_class kmax = ceil_div(mpz_class(g.max_index.value() * g.one + detail::fx_abs(g.a)), g.b) + 1;
    const mpz_class E = ceil_div(mpz_class(g.unc_a * g.M), g.one) + ceil_div(kmax, 2) + 3;
    const mpz_class width = 2 * E;
    std::optional<RecoveredIndex> pick;
    for (Branch br : order) {
      // b' k -+ a' lies in [-E, E] (mod M) for the true k.
      const mpz_class c = (br == Branch::plus ? p.a_prime : mpz_class(-p.a_prime)) + E;
      mpz_class k_start = 0;
      for (std::size_t hits = 0; hits < cap && cmp(k_start, kmax) <= 0; ++hits) {
        mpz_class k;
        if (cmp(width, mpz_class(g.M - 1)) >= 0) {
          k = k_start;
        } else {
          auto h = first_hit(p.b_prime, mpz_class(c + p.b_prime * k_start), g.M, 0, width);
          if (!h) break;
          k = k_start + *h;
        }
        if (cmp(k, kmax) > 0) break;
        k_start = k + 1;
        auto R = search.integral(br, k);
        if (!R) continue;
        if (auto res = search.verify(*R)) {
          if (!pick || *R < pick->r_prime) pick = found(br, k, *R, *res, Method::windowed);
          break;
        }
      }
    }
    // Smallest verified index over both branches.
    if (pick) {
      pick->candidates_tried = search.tried();
      return *pick;
    }
  }

  std::string msg = "no verified equivalent index after " + std::to_string(search.tried()) + " candidates";
  if (search.best()) msg += " (best residual " + search.best()->to_string() + ")";
  throw AttackFailed(msg, search.best());
}

std::vector<IndexCandidate> enumerate_index_candidates(const MapFamily& family, const Real& x, const Real& y,
                                                       const AttackOptions& opts, const Index& bound) {
  const Geometry g = build_geometry(family, x, y, opts, detail::index_bits(bound));
  const AttackParams& p = *g.params;
  Search search(family, x, y, g);
  const mpz_class limit = bound.value() + 1;
  std::vector<IndexCandidate> out;
  for (Branch br : branch_order(opts.branches)) {
    mpz_class start = 0, step = 1;
    if (!(sgn(p.b_prime) == 0 && sgn(p.a_prime) != 0)) {
      auto sol = try_solve(p.b_prime, branch_rhs(br, p), p.modulus);
      if (!sol) continue;
      start = sol->x0;
      step = sol->step();
    }
    for (mpz_class k = start; !search.beyond(br, k, limit); k += step) {
      auto R = search.integral(br, k);
      if (R && *R <= bound) out.push_back(IndexCandidate{*R, br, k});
    }
  }
  std::sort(out.begin(), out.end(), [](const IndexCandidate& l, const IndexCandidate& r) { return l.r_prime < r.r_prime; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const IndexCandidate& l, const IndexCandidate& r) { return l.r_prime == r.r_prime; }),
            out.end());
  return out;
}

DecryptAttack attack_decrypt_detailed(const PublicKey& pk, const Ciphertext& c, const AttackOptions& opts) {
  RecoveredIndex idx = recover_index(pk.family, pk.x, c.u, opts);
  Real mask = pk.family.eval(idx.r_prime, pk.y);
  if (negligible(mask)) throw PrecisionBreakdown("recovered mask vanishes within epsilon");
  Real M = c.X / mask;
  return DecryptAttack{std::move(idx), std::move(M)};
}

Real attack_decrypt(const PublicKey& pk, const Ciphertext& c, const AttackOptions& opts) {
  return attack_decrypt_detailed(pk, c, opts).plaintext;
}

Real attack_key_agreement(const MapFamily& family, const Real& X, const Real& Y, const Real& Y_prime,
                          const AttackOptions& opts) {
  RecoveredIndex idx = recover_index(family, X, Y, opts);
  return family.eval(idx.r_prime, Y_prime);
}

}  // namespace chaoscheb
