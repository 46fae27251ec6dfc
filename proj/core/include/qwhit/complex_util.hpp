#ifndef QWHIT_COMPLEX_UTIL_HPP
#define QWHIT_COMPLEX_UTIL_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

namespace qwhit {

using Cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Cplx iu{0.0, 1.0};

// exp(i*t) for real t.
inline Cplx expi(double t) { return {std::cos(t), std::sin(t)}; }

// log(1 + exp(w)) without overflow for large Re(w).
inline Cplx log1p_exp(Cplx w)
{
    if (w.real() > 0.0)
        return w + std::log(1.0 + std::exp(-w));
    return std::log(1.0 + std::exp(w));
}

inline bool is_finite(Cplx z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline double abs2(Cplx z) { return z.real() * z.real() + z.imag() * z.imag(); }

// Relative deviation |a-b| / max(|a|,|b|,floor).
inline double rel_dev(Cplx a, Cplx b, double floor = 1e-300)
{
    double scale = std::max({std::abs(a), std::abs(b), floor});
    return std::abs(a - b) / scale;
}

// Format a double with 17 significant digits (round-trip exact).
std::string format_full(double x);
std::string format_cplx(Cplx z);

// Parse "a", "a+bi", "a-bi", "bi" style complex literals.
Cplx parse_cplx(const std::string& s);

} // namespace qwhit

#endif
