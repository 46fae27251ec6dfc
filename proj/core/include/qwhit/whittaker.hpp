#ifndef QWHIT_WHITTAKER_HPP
#define QWHIT_WHITTAKER_HPP

#include <atomic>
#include <map>
#include <memory>
#include <mutex>

#include "qwhit/chebyshev.hpp"
#include "qwhit/contour.hpp"
#include "qwhit/modular_parameter.hpp"
#include "qwhit/quadrature.hpp"
#include "qwhit/sklyanin_measure.hpp"

namespace qwhit {

struct WhittakerOptions {
    enum class Method { givental, mellin_barnes };

    double epsilon = -1.0; // contour shift; negative means Im(c_b)/2
    double tol = 1e-9;
    Method method = Method::givental;
    long long budget = 0; // 0 picks the per-dimension default
    // Values below this magnitude only need absolute accuracy; callers that
    // integrate the eigenfunction against O(1) kernels set it to avoid
    // chasing relative precision deep in the decaying tails.
    double abs_floor = 0.0;

    double resolved_epsilon(const ModularParameter& P) const
    {
        const double e = epsilon < 0.0 ? 0.5 * P.strip() : epsilon;
        if (!(e > 0.0) || !(e < P.strip()))
            throw Error("WhittakerOptions: epsilon must lie in (0, Im c_b)");
        return e;
    }
};

// Rank-2 eigenfunction evaluated through its one-dimensional reduction
//   value(x1, x2) = zeta^{-1} e^{pi i c_b (l2 - l1)} e^{2 pi i (l1 x1 + l2 x2)}
//                   * J(x2 - x1),
// where J is a contour integral depending only on the difference of the
// coordinates.  Repeated evaluations on a fixed horizontal line of the
// difference variable are served from Chebyshev line caches.
class Whittaker2 {
public:
    Whittaker2(Cplx lambda1, Cplx lambda2, const ModularParameter& P,
               double tol = 1e-10, double epsilon = -1.0, bool enable_cache = true);

    Cplx operator()(Cplx x1, Cplx x2) const;
    Cplx value(Cplx x1, Cplx x2) const { return (*this)(x1, x2); }

    // The difference-variable integral; exposed for contour-robustness tests.
    Cplx J_direct(Cplx w, double epsilon_override = -1.0) const;

private:
    struct LineCache {
        Cheb1 interp;
        bool built = false;
        int hits = 0;
        double lo = 0.0, hi = 0.0;
    };

    ContourPath j_contour(Cplx w, double eps_pref) const;
    Cplx J(Cplx w) const;

    Cplx l1_, l2_;
    ModularParameter P_;
    double tol_;
    double eps_;
    bool cache_enabled_;
    mutable std::mutex mu_;
    mutable std::map<long long, LineCache> lines_;
    // Largest |J| seen; sets the absolute accuracy floor in decayed regions.
    mutable std::atomic<double> j_peak_{0.0};
};

// Psi^{(n)} for n <= 3 via either representation.
Cplx whittaker(const SpectralVector& lambda, const CoordinateVector& x,
               const ModularParameter& P, const WhittakerOptions& opts = {});

// psi^{(n)} = exp(pi i (1-n)/2 * sum lambda_j^2) Psi^{(n)}.
Cplx whittaker_mb_normalized(const SpectralVector& lambda, const CoordinateVector& x,
                             const ModularParameter& P,
                             const WhittakerOptions& opts = {});

// Spectral kernel of the rank recursion:
//   L_n(mu, lambda; x_next) = zeta^{-n} e^{pi i (2 x_next - mu_)(lambda_ - mu_)}
//                             prod_{j<=n+1} prod_{k<=n} c(lambda_j - mu_k).
Cplx mb_kernel(const SpectralVector& mu, const SpectralVector& lambda, Cplx x_next,
               const ModularParameter& P, double tol = 1e-9);

// Leading coordinate asymptotics deep in the chamber x_1 >= ... >= x_n.
Cplx asymptotic_estimate(const SpectralVector& lambda, const CoordinateVector& x,
                         const ModularParameter& P);

} // namespace qwhit

#endif
