#ifndef QWHIT_SKLYANIN_MEASURE_HPP
#define QWHIT_SKLYANIN_MEASURE_HPP

#include <vector>

#include "qwhit/complex_util.hpp"
#include "qwhit/modular_parameter.hpp"

namespace qwhit {

// Spectral and coordinate tuples; entries are complex in general, real in
// standard use.
using SpectralVector = std::vector<Cplx>;
using CoordinateVector = std::vector<Cplx>;

// Sum of all coordinates.
Cplx vec_sum(const std::vector<Cplx>& v);

// rho_s(x) = (1/2) sum_{1 <= j < k <= s} (x_j - x_k).
Cplx rho(int s, const CoordinateVector& x);

// Sklyanin density m(lambda) = (1/n!) prod_{j != k} c(lambda_j - lambda_k)^{-1},
// evaluated through the stable product of sinh factors.  Exactly zero at
// coinciding entries.
Cplx sklyanin_m(const SpectralVector& lambda, const ModularParameter& P);

// Non-symmetric density whose symmetrization over S_n recovers m(lambda).
Cplx sklyanin_mfrak(const SpectralVector& lambda, const ModularParameter& P);

} // namespace qwhit

#endif
