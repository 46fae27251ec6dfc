#include "qwhit/sklyanin_measure.hpp"

#include "qwhit/errors.hpp"

namespace qwhit {

Cplx vec_sum(const std::vector<Cplx>& v)
{
    Cplx s = 0.0;
    for (Cplx z : v) s += z;
    return s;
}

Cplx rho(int s, const CoordinateVector& x)
{
    if (s < 1 || static_cast<size_t>(s) > x.size())
        throw Error("rho: index exceeds the rank");
    Cplx acc = 0.0;
    for (int j = 0; j < s; ++j)
        for (int k = j + 1; k < s; ++k)
            acc += x[static_cast<size_t>(j)] - x[static_cast<size_t>(k)];
    return 0.5 * acc;
}

Cplx sklyanin_m(const SpectralVector& lambda, const ModularParameter& P)
{
    const size_t n = lambda.size();
    if (n == 0) throw Error("sklyanin_m: empty spectral vector");
    double fact = 1.0;
    for (size_t k = 2; k <= n; ++k) fact *= static_cast<double>(k);
    Cplx prod = 1.0;
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
            const Cplx d = lambda[j] - lambda[k];
            if (d == 0.0) return 0.0;
            prod *= 4.0 * std::sinh(pi * P.b() * d) * std::sinh(pi * d / P.b());
        }
    return prod / fact;
}

Cplx sklyanin_mfrak(const SpectralVector& lambda, const ModularParameter& P)
{
    const size_t n = lambda.size();
    if (n == 0) throw Error("sklyanin_mfrak: empty spectral vector");
    const double b = P.b();
    Cplx expo = 0.0;
    for (size_t j = 0; j < n; ++j)
        expo += (2.0 * (static_cast<double>(j) + 1.0) - static_cast<double>(n) - 1.0) *
                pi * b * lambda[j];
    Cplx prod = std::exp(expo);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
            const Cplx d = lambda[k] - lambda[j];
            prod *= std::exp(pi * d / b) - std::exp(-pi * d / b);
        }
    return prod;
}

} // namespace qwhit
