#ifndef QWHIT_QUANTUM_DILOG_HPP
#define QWHIT_QUANTUM_DILOG_HPP

#include "qwhit/complex_util.hpp"
#include "qwhit/modular_parameter.hpp"

namespace qwhit {

// Poles and zeros of the dilogarithm sit on the imaginary axis at
// +-(c_b + i b m + i n / b) for m, n >= 0: poles with the plus sign, zeros
// with the minus sign.
struct PoleLatticePoint {
    int m = 0;
    int n = 0;
    enum class Kind { pole, zero } kind = Kind::pole;
    Cplx location{};
};

// Lattice point nearest to z, and the distance to it.
PoleLatticePoint nearest_phi_singularity(Cplx z, const ModularParameter& P);
double phi_singularity_distance(Cplx z, const ModularParameter& P);

// Distance from z to the pole/zero lattice of the c-function
// (poles at -i(bm + n/b) including 0, zeros mirrored above 2 c_b).
double c_singularity_distance(Cplx z, const ModularParameter& P);

// log of the noncompact quantum dilogarithm from its defining contour
// integral; valid in the strip |Im z| < Im(c_b) (enforced with margin).
// Reference evaluator: slow, used for cross-checks and to seed the tables.
Cplx log_phi_integral(Cplx z, const ModularParameter& P, double tol = 1e-14);

// log of the dilogarithm anywhere away from the pole/zero lattice: ladder of
// functional equations into the landing strip plus cached Chebyshev panels.
// The branch is the one obtained by summing principal logs along the ladder;
// exp(log_phi) is branch-independent.
Cplx log_phi(Cplx z, const ModularParameter& P, double tol = 1e-11);

// phi_b(z).  delta_override < 0 means the default pole proximity radius.
Cplx phi(Cplx z, const ModularParameter& P, double tol = 1e-9,
         double delta_override = -1.0);

// log c(z) and c(z), via the exact relation between c and the dilogarithm.
Cplx log_c_function(Cplx z, const ModularParameter& P, double tol = 1e-9);
Cplx c_function(Cplx z, const ModularParameter& P, double tol = 1e-9,
                double delta_override = -1.0);

// |2 pi i zeta eps phi(eps + c_b) - 1| for a small probe eps; first-order
// accurate in |eps|.
double phi_pole_residue_check(const ModularParameter& P, double tol = 1e-9,
                              Cplx eps = Cplx(1e-4, 1e-4));

// zeta phi(eps - c_b) / (2 pi i eps); tends to -1 as eps -> 0.
Cplx phi_zero_probe(const ModularParameter& P, double tol = 1e-9,
                    Cplx eps = Cplx(1e-4, 1e-4));

} // namespace qwhit

#endif
