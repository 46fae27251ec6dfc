#include "qwhit/gaussian_packet.hpp"

#include <cmath>

namespace qwhit {

namespace poly {

Cplx eval(const std::vector<Cplx>& p, Cplx x)
{
    Cplx r = 0.0;
    for (size_t k = p.size(); k-- > 0;) r = r * x + p[k];
    return r;
}

std::vector<Cplx> mul(const std::vector<Cplx>& p, const std::vector<Cplx>& q)
{
    std::vector<Cplx> r(p.size() + q.size() - 1, Cplx(0.0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

std::vector<Cplx> compose_linear(const std::vector<Cplx>& p, Cplx a, Cplx c)
{
    // Horner in the linear argument: result(x) = p(a x + c)
    std::vector<Cplx> r{Cplx(0.0)};
    for (size_t k = p.size(); k-- > 0;) {
        // r <- r * (a x + c) + p[k]
        std::vector<Cplx> next(r.size() + 1, Cplx(0.0));
        for (size_t i = 0; i < r.size(); ++i) {
            next[i + 1] += r[i] * a;
            next[i] += r[i] * c;
        }
        next[0] += p[k];
        r = std::move(next);
    }
    while (r.size() > 1 && std::abs(r.back()) == 0.0) r.pop_back();
    return r;
}

std::vector<Cplx> derivative(const std::vector<Cplx>& p)
{
    if (p.size() <= 1) return {Cplx(0.0)};
    std::vector<Cplx> r(p.size() - 1);
    for (size_t k = 1; k < p.size(); ++k) r[k - 1] = static_cast<double>(k) * p[k];
    return r;
}

} // namespace poly

GaussianPacket::GaussianPacket(std::vector<Factor> factors, Cplx scalar)
    : factors_(std::move(factors)), scalar_(scalar)
{
    if (factors_.empty()) throw Error("GaussianPacket: rank must be >= 1");
    for (const auto& f : factors_) {
        if (!(f.alpha.real() > 0.0))
            throw Error("GaussianPacket: Re(alpha) must be positive");
        if (f.poly.empty()) throw Error("GaussianPacket: empty polynomial");
    }
}

GaussianPacket GaussianPacket::unit(int rank)
{
    std::vector<Factor> fs(static_cast<size_t>(rank), Factor{Cplx(1.0), Cplx(0.0), {Cplx(1.0)}});
    return GaussianPacket(std::move(fs));
}

GaussianPacket GaussianPacket::random(std::mt19937_64& rng, int rank, int max_degree)
{
    std::uniform_real_distribution<double> ua(0.6, 1.4);
    std::uniform_real_distribution<double> uai(-0.3, 0.3);
    std::uniform_real_distribution<double> ub(-0.8, 0.8);
    std::uniform_int_distribution<int> ud(0, max_degree);
    std::vector<Factor> fs;
    for (int j = 0; j < rank; ++j) {
        Factor f;
        f.alpha = Cplx(ua(rng), uai(rng));
        f.beta = Cplx(ub(rng), ub(rng));
        const int deg = ud(rng);
        f.poly.assign(static_cast<size_t>(deg) + 1, Cplx(0.0));
        for (int k = 0; k <= deg; ++k) f.poly[static_cast<size_t>(k)] = Cplx(ub(rng), ub(rng));
        if (std::abs(f.poly.back()) < 0.1) f.poly.back() += 0.5; // keep the degree honest
        fs.push_back(std::move(f));
    }
    return GaussianPacket(std::move(fs));
}

Cplx GaussianPacket::operator()(std::span<const Cplx> x) const
{
    if (x.size() != factors_.size())
        throw Error("GaussianPacket: wrong number of coordinates");
    Cplx expo = 0.0;
    Cplx polyprod = 1.0;
    for (size_t j = 0; j < factors_.size(); ++j) {
        const Factor& f = factors_[j];
        expo += -f.alpha * x[j] * x[j] + f.beta * x[j];
        polyprod *= poly::eval(f.poly, x[j]);
    }
    return scalar_ * polyprod * std::exp(expo);
}

GaussianPacket GaussianPacket::scaled(Cplx c) const
{
    GaussianPacket r = *this;
    r.scalar_ *= c;
    return r;
}

GaussianPacket GaussianPacket::mul_exp_linear(int j, Cplx gamma) const
{
    GaussianPacket r = *this;
    r.factors_[static_cast<size_t>(j)].beta += gamma;
    return r;
}

GaussianPacket GaussianPacket::mul_gauss_phase(int j, int sign) const
{
    GaussianPacket r = *this;
    r.factors_[static_cast<size_t>(j)].alpha -= Cplx(0.0, sign * pi);
    return r;
}

GaussianPacket GaussianPacket::shifted(int j, Cplx w) const
{
    GaussianPacket r = *this;
    Factor& f = r.factors_[static_cast<size_t>(j)];
    // exp(-a(x+w)^2 + b(x+w)) = exp(-a w^2 + b w) exp(-a x^2 + (b - 2aw) x)
    r.scalar_ *= std::exp(-f.alpha * w * w + f.beta * w);
    f.beta -= 2.0 * f.alpha * w;
    f.poly = poly::compose_linear(f.poly, Cplx(1.0), w);
    return r;
}

GaussianPacket GaussianPacket::mul_poly(int j, const std::vector<Cplx>& q) const
{
    GaussianPacket r = *this;
    Factor& f = r.factors_[static_cast<size_t>(j)];
    f.poly = poly::mul(f.poly, q);
    return r;
}

GaussianPacket GaussianPacket::fourier(int j, int sign) const
{
    GaussianPacket r = *this;
    Factor& f = r.factors_[static_cast<size_t>(j)];
    const Cplx a = f.alpha;
    const Cplx beta = f.beta;

    // int x^k exp(-a x^2 + g x) dx = sqrt(pi/a) exp(g^2/4a) h_k(g), with
    // h_0 = 1 and h_{k+1} = h_k' + (g/2a) h_k; here g = beta - sign 2 pi i k.
    std::vector<std::vector<Cplx>> h; // h_k as polynomials in g
    h.push_back({Cplx(1.0)});
    for (size_t k = 1; k < f.poly.size(); ++k) {
        std::vector<Cplx> next = poly::derivative(h.back());
        std::vector<Cplx> grow = poly::mul(h.back(), {Cplx(0.0), 1.0 / (2.0 * a)});
        next.resize(std::max(next.size(), grow.size()), Cplx(0.0));
        for (size_t i = 0; i < grow.size(); ++i) next[i] += grow[i];
        h.push_back(std::move(next));
    }
    std::vector<Cplx> hsum{Cplx(0.0)};
    for (size_t k = 0; k < f.poly.size(); ++k) {
        auto term = h[k];
        for (auto& c : term) c *= f.poly[k];
        hsum.resize(std::max(hsum.size(), term.size()), Cplx(0.0));
        for (size_t i = 0; i < term.size(); ++i) hsum[i] += term[i];
    }

    // g = beta - sign * 2 pi i k:
    //   g^2/4a = beta^2/4a - (sign pi i beta / a) k - (pi^2/a) k^2
    const Cplx s2pii = Cplx(0.0, sign * 2.0 * pi);
    r.scalar_ *= std::sqrt(pi / a) * std::exp(beta * beta / (4.0 * a));
    f.alpha = pi * pi / a;
    f.beta = -Cplx(0.0, sign * pi) * beta / a;
    f.poly = poly::compose_linear(hsum, -s2pii, beta);
    return r;
}

GaussianPacket GaussianPacket::quadratic_momentum_flow(int j, int sign) const
{
    // exp(sign i pi p^2) f = IFT[ exp(sign i pi k^2) FT[f] ]
    return fourier(j, +1).mul_gauss_phase(j, sign).fourier(j, -1);
}

} // namespace qwhit
