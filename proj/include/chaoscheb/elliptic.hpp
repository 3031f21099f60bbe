#pragma once

// Jacobian elliptic functions on the real line and the rational maps
// R_p(w, k) = cn(p * cn^-1(w, k), k), all evaluated by the AGM scheme.

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "chaoscheb/index.hpp"
#include "chaoscheb/realnum.hpp"

namespace chaoscheb {

// Elliptic modulus k with 0 <= k <= 1 - B^-(L/2). The value can be given as
// k or as the parameter m = k^2; whichever form is given is used exactly.
class Modulus {
 public:
  static Modulus from_k(const Real& k);
  static Modulus from_parameter(const Real& m);

  // k rounded to the config's digits (sqrt(m) for the parameter form).
  const Real& k() const { return state_->k; }
  // m = k^2 rounded (exact when given in parameter form).
  const Real& parameter() const { return state_->m; }
  bool parameter_form() const { return state_->parameter_form; }
  Real k_prime() const;
  const PrecisionConfig& config() const { return state_->k.config(); }

  // Fixed-point parameter m at 2^-prec.
  mpz_class parameter_fixed(long prec) const;

  // Quarter period K, computed once.
  const Real& quarter_period() const;

 private:
  struct State {
    State(Real k_, Real m_, bool form) : k(std::move(k_)), m(std::move(m_)), parameter_form(form) {}
    Real k;
    Real m;
    bool parameter_form;
    mutable std::once_flag once;
    mutable std::optional<Real> K;
  };
  explicit Modulus(std::shared_ptr<const State> s) : state_(std::move(s)) {}
  std::shared_ptr<const State> state_;
};

struct AgmState {
  std::vector<Real> a, b, c;
  int steps() const { return static_cast<int>(a.size()) - 1; }
};

// a_{j+1} = (a_j + b_j)/2, b_{j+1} = sqrt(a_j b_j), c_{j+1} = (a_j - b_j)/2
// until c_n <= B^-L. Requires a0 >= b0 > 0 (DomainError when b0 <= 0).
AgmState agm(const Real& a0, const Real& b0);

// K = pi / (2 a_n) with a_n the limit of agm(1, k').
Real quarter_period(const Modulus& k);

Real cn(const Real& omega, const Modulus& k);
Real sn(const Real& omega, const Modulus& k);

// Value in [0, 2K]; DomainError when |v| > 1.
Real cn_inverse(const Real& v, const Modulus& k);

// R_p by the three-term rational recurrence, R_0 = 1, R_1 = w. O(p);
// DomainError above 10^6.
Real jacobi_map_recurrence(const Index& p, const Real& omega, const Modulus& k);

// cn(p * cn^-1(w, k), k).
Real jacobi_map(const Index& p, const Real& omega, const Modulus& k);

}  // namespace chaoscheb
