#ifndef QWHIT_MODULAR_PARAMETER_HPP
#define QWHIT_MODULAR_PARAMETER_HPP

#include "qwhit/complex_util.hpp"
#include "qwhit/errors.hpp"

namespace qwhit {

// The modular coupling b together with every derived constant used by the
// dilogarithm and the integral kernels.  All members are immutable.
//
//   c_b      = i(b + 1/b)/2
//   delta_b  = i(b - 1/b)/2
//   q        = exp(pi i b^2)
//   zeta     = exp(pi i (1 - 4 c_b^2) / 12)
//   zeta_inv = zeta^{-2} exp(-pi i c_b^2)
class ModularParameter {
public:
    explicit ModularParameter(double b);

    double b() const { return b_; }
    double b_inv() const { return 1.0 / b_; }
    double b_min() const { return b_ < 1.0 / b_ ? b_ : 1.0 / b_; }
    double b_max() const { return b_ < 1.0 / b_ ? 1.0 / b_ : b_; }
    // b + 1/b; twice the strip half-width.
    double big_b() const { return b_ + 1.0 / b_; }

    Cplx c_b() const { return c_b_; }
    Cplx delta_b() const { return delta_b_; }
    Cplx q() const { return q_; }
    Cplx zeta() const { return zeta_; }
    Cplx zeta_inv() const { return zeta_inv_; }
    Cplx log_zeta() const { return log_zeta_; }
    Cplx log_zeta_inv() const { return log_zeta_inv_; }

    // Half-width Im(c_b) of the strip where the defining integral converges.
    double strip() const { return 0.5 * big_b(); }

    // Default proximity radius for pole/zero rejection.
    double delta_pole() const { return 1e-6 * big_b(); }

private:
    double b_;
    Cplx c_b_, delta_b_, q_, zeta_, zeta_inv_, log_zeta_, log_zeta_inv_;
};

} // namespace qwhit

#endif
