#ifndef QWHIT_QUADRATURE_HPP
#define QWHIT_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

#include "qwhit/complex_util.hpp"
#include "qwhit/contour.hpp"
#include "qwhit/errors.hpp"

namespace qwhit {

struct QuadratureResult {
    Cplx value{};
    double abs_error = 0.0;
    long long evaluations = 0;
};

struct IntegrateOptions {
    double tol = 1e-9;      // relative error target
    double abs_floor = 0.0; // absolute error accepted regardless of |value|
    long long budget = 200'000;
    double first_block = 4.0; // initial ray block length
    int max_blocks = 56;      // ray blocks before NonDecayingTail
    // Relative noise level of integrand values (nonzero when the integrand
    // is itself computed by quadrature); bounds the achievable accuracy.
    double integrand_noise = 0.0;
};

using Integrand1 = std::function<Cplx(Cplx)>;
using IntegrandN = std::function<Cplx(std::span<const Cplx>)>;

// Adaptive Gauss-Kronrod quadrature of f along the path.  Ray tails are
// truncated adaptively with a geometric block rule; abs_error includes the
// tail bound.  Throws NonDecayingTail / BudgetExceeded / QuadratureFailure.
QuadratureResult integrate(const Integrand1& f, const ContourPath& path,
                           const IntegrateOptions& opts = {});

struct NestedOptions {
    double tol = 1e-7;
    double tighten = 0.25; // per-axis tolerance factor toward the inner axes
    long long budget = 10'000'000;
    double first_block = 4.0;
    int max_blocks = 56;
    double integrand_noise = 0.0; // relative noise of the innermost integrand
};

// Iterated quadrature over a product of paths; the innermost axis is the
// last entry of `paths`.  Dimension <= 3.
QuadratureResult integrate_nested(const IntegrandN& f,
                                  const std::vector<ContourPath>& paths,
                                  const NestedOptions& opts = {});

// Adaptive quadrature over a single straight segment from a to b.
QuadratureResult integrate_segment(const Integrand1& f, Cplx a, Cplx b,
                                   double tol, double abs_floor = 0.0,
                                   long long budget = 200'000);

} // namespace qwhit

#endif
