#ifndef QWHIT_GAUSSIAN_PACKET_HPP
#define QWHIT_GAUSSIAN_PACKET_HPP

#include <random>
#include <span>
#include <vector>

#include "qwhit/complex_util.hpp"
#include "qwhit/errors.hpp"

namespace qwhit {

// Polynomial helpers on complex coefficient lists (index = power).
namespace poly {
Cplx eval(const std::vector<Cplx>& p, Cplx x);
std::vector<Cplx> mul(const std::vector<Cplx>& p, const std::vector<Cplx>& q);
// p(a*x + c)
std::vector<Cplx> compose_linear(const std::vector<Cplx>& p, Cplx a, Cplx c);
std::vector<Cplx> derivative(const std::vector<Cplx>& p);
} // namespace poly

// Product test function: scalar * prod_j exp(-alpha_j x_j^2 + beta_j x_j) p_j(x_j)
// with Re(alpha_j) > 0.  Closed under coordinate shifts, multiplication by
// exponentials and unit Gaussians, and the exact Fourier transform in any one
// coordinate, which makes the quadratic momentum flows exact on this family.
class GaussianPacket {
public:
    struct Factor {
        Cplx alpha;
        Cplx beta;
        std::vector<Cplx> poly{Cplx(1.0, 0.0)};
    };

    GaussianPacket(std::vector<Factor> factors, Cplx scalar = 1.0);

    // exp(-x^2) in every coordinate.
    static GaussianPacket unit(int rank);

    // Deterministic sampler for property tests.
    static GaussianPacket random(std::mt19937_64& rng, int rank, int max_degree = 2);

    int rank() const { return static_cast<int>(factors_.size()); }
    Cplx scalar() const { return scalar_; }
    const Factor& factor(int j) const { return factors_[static_cast<size_t>(j)]; }

    Cplx operator()(std::span<const Cplx> x) const;
    Cplx operator()(std::initializer_list<Cplx> x) const
    {
        return (*this)(std::span<const Cplx>(x.begin(), x.size()));
    }

    GaussianPacket scaled(Cplx c) const;
    // multiply by exp(gamma x_j)
    GaussianPacket mul_exp_linear(int j, Cplx gamma) const;
    // multiply by exp(sign * i pi x_j^2); Re(alpha_j) is unchanged
    GaussianPacket mul_gauss_phase(int j, int sign) const;
    // x_j -> x_j + w
    GaussianPacket shifted(int j, Cplx w) const;
    GaussianPacket mul_poly(int j, const std::vector<Cplx>& q) const;
    // integral over x_j against exp(-sign * 2 pi i x_j k): the result is a
    // packet in the dual variable k placed at the same coordinate slot
    GaussianPacket fourier(int j, int sign) const;
    // exp(sign * i pi p_j^2) applied exactly through the Fourier transform
    GaussianPacket quadratic_momentum_flow(int j, int sign) const;

private:
    std::vector<Factor> factors_;
    Cplx scalar_;
};

} // namespace qwhit

#endif
