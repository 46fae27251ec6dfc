#include "qwhit/quantum_dilog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "qwhit/chebyshev.hpp"
#include "qwhit/quadrature.hpp"

namespace qwhit {

namespace {

// ---------------------------------------------------------------------------
// Defining contour integral.
//
// log phi(z) = (1/4) int_C exp(-2izt) / (sinh(tb) sinh(t/b) t) dt, where C
// runs along the real axis and passes above the origin in a small
// semicircle.  The two rays are folded onto [r, inf) which turns the
// integrand into -2i sin(2zt) / (sinh(tb) sinh(t/b) t).
// ---------------------------------------------------------------------------

Cplx ray_integrand(Cplx z, double t, double b)
{
    const double sb = std::sinh(t * b);
    const double sbi = std::sinh(t / b);
    return -2.0 * iu * std::sin(2.0 * z * t) / (sb * sbi * t);
}

Cplx arc_integrand(Cplx z, double theta, double r, double b)
{
    const Cplx t = r * expi(theta);
    const Cplx g = std::exp(-2.0 * iu * z * t) / (std::sinh(t * b) * std::sinh(t / b) * t);
    return -g * iu * t; // includes dt = i r e^{i theta} d(theta), sign from theta: pi -> 0
}

} // namespace

Cplx log_phi_integral(Cplx z, const ModularParameter& P, double tol)
{
    const double strip = P.strip();
    if (std::abs(z.imag()) > 0.98 * strip)
        throw Error("log_phi_integral: argument outside the convergence strip");

    const double b = P.b();
    // The arc integrand grows like exp(2 |Re z| r) / r^2, so shrink the
    // semicircle for large |Re z| to keep cancellation noise down.
    const double r =
        std::min({1.0, 1.2 * P.b_min(), 1.5 / std::max(1.0, std::abs(z.real()))});

    // Tail cutoff: integrand decays like exp(-(B - 2|Im z|) t) / t.
    const double rate = P.big_b() - 2.0 * std::abs(z.imag());
    const double T = r + (36.0 + std::log1p(std::abs(z))) / rate;

    const double floor = tol * 10.0 * std::max(1.0, std::abs(z.real()));
    QuadratureResult ray = integrate_segment(
        [&](Cplx t) { return ray_integrand(z, t.real(), b); }, Cplx(r, 0.0),
        Cplx(T, 0.0), tol, floor, 400'000);
    QuadratureResult arc = integrate_segment(
        [&](Cplx th) { return arc_integrand(z, th.real(), r, b); }, Cplx(0.0, 0.0),
        Cplx(pi, 0.0), tol, floor, 200'000);

    return 0.25 * (ray.value + arc.value);
}

// ---------------------------------------------------------------------------
// Fast evaluator: functional-equation ladder into a landing strip
// |Im z| <= b_min/2, where lazily built Chebyshev panels interpolate the
// reference integral.  Tables are shared per coupling; b and 1/b give the
// same function, so the cache key is the canonical pair (b_min, b_max).
// ---------------------------------------------------------------------------

namespace {

class PhiTable {
public:
    explicit PhiTable(double b)
        : P_(b), h_land_(0.5 * P_.b_min()), h_dom_(0.5 * P_.b_min() * 1.02 + 1e-9),
          T0_(std::ceil(6.0 / P_.b_min() + 2.0)), width_(1.0)
    {
    }

    double h_land() const { return h_land_; }
    double t0() const { return T0_; }

    // z must lie in the landing strip.
    Cplx eval(Cplx z) const
    {
        const double x = z.real();
        if (x < -T0_) return 0.0;
        if (x > T0_) return P_.log_zeta_inv() + iu * pi * z * z;
        const int idx = static_cast<int>(std::floor((x + T0_) / width_));
        const Cheb2* panel = nullptr;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = panels_.find(idx);
            if (it == panels_.end()) {
                const double ax = -T0_ + idx * width_;
                Cheb2 c(
                    [&](double xx, double yy) {
                        return log_phi_integral(Cplx(xx, yy), P_, 1e-14);
                    },
                    ax, ax + width_, -h_dom_, h_dom_, 30, 34);
                it = panels_.emplace(idx, std::move(c)).first;
            }
            panel = &it->second;
        }
        return (*panel)(z.real(), z.imag());
    }

private:
    ModularParameter P_;
    double h_land_, h_dom_, T0_, width_;
    mutable std::mutex mu_;
    mutable std::map<int, Cheb2> panels_;
};

std::shared_ptr<PhiTable> table_for(const ModularParameter& P)
{
    static std::mutex reg_mu;
    static std::unordered_map<long long, std::shared_ptr<PhiTable>> registry;
    // canonical under b <-> 1/b; quantized so that b and 1/(1/b) share a table
    const long long key = std::llround(P.b_min() * 1e12);
    std::lock_guard<std::mutex> lock(reg_mu);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::make_shared<PhiTable>(P.b_min())).first;
    return it->second;
}

} // namespace

Cplx log_phi(Cplx z, const ModularParameter& P, double tol)
{
    auto table = table_for(P);
    const double h_land = table->h_land() + 1e-12;
    Cplx acc = 0.0;

    const double bmax = P.b_max();
    const double bmin = P.b_min();
    int guard = 0;
    while (std::abs(z.imag()) > h_land) {
        if (++guard > 4000) throw Error("log_phi: ladder failed to terminate");
        if (z.imag() > 0.0) {
            const double s = (z.imag() - bmax >= -h_land) ? bmax : bmin;
            acc -= log1p_exp(2.0 * pi * s * (z - iu * (0.5 * s)));
            z -= iu * s;
        } else {
            const double s = (z.imag() + bmax <= h_land) ? bmax : bmin;
            acc += log1p_exp(2.0 * pi * s * (z + iu * (0.5 * s)));
            z += iu * s;
        }
    }

    Cplx base;
    if (tol < 1e-12 && std::abs(z.real()) <= table->t0())
        base = log_phi_integral(z, P, std::min(tol, 1e-14));
    else
        base = table->eval(z);
    return base + acc;
}

Cplx phi(Cplx z, const ModularParameter& P, double tol, double delta_override)
{
    const double delta = delta_override >= 0.0 ? delta_override : P.delta_pole();
    if (phi_singularity_distance(z, P) < delta)
        throw PoleProximity("phi evaluated within delta_pole of a pole or zero");
    return std::exp(log_phi(z, P, tol));
}

// ---------------------------------------------------------------------------
// Singularity lattices.
// ---------------------------------------------------------------------------

namespace {

// Distance from |imag| = t (with m b + n / b offsets from t0) minimized over
// the nonnegative integer lattice.
double lattice_gap(double t, const ModularParameter& P)
{
    // minimize |t - (m b + n / b)| over m, n >= 0; t may be negative.
    if (t <= 0.0) return -t; // nearest lattice value is 0
    const double b = P.b_min(), bi = P.b_max();
    double best = t; // m = n = 0
    const int mmax = static_cast<int>(t / b) + 1;
    for (int m = 0; m <= mmax; ++m) {
        const double rem = t - m * b;
        int n = std::max(0, static_cast<int>(std::lround(rem / bi)));
        for (int dn = -1; dn <= 1; ++dn) {
            const int nn = n + dn;
            if (nn < 0) continue;
            best = std::min(best, std::abs(rem - nn * bi));
        }
    }
    return best;
}

} // namespace

PoleLatticePoint nearest_phi_singularity(Cplx z, const ModularParameter& P)
{
    // Lattice points: +- i (B/2 + m b + n / b).  Brute-force the small
    // neighbourhood of |Im z|.
    const double b = P.b_min(), bi = P.b_max();
    const double half = P.strip();
    PoleLatticePoint bestPt;
    double best = std::numeric_limits<double>::infinity();
    for (int sign = -1; sign <= 1; sign += 2) {
        const double t = sign > 0 ? z.imag() - half : -z.imag() - half;
        const int mmax = std::max(0, static_cast<int>(t / b)) + 1;
        for (int m = 0; m <= mmax; ++m) {
            const double rem = t - m * b;
            const int n0 = std::max(0, static_cast<int>(std::lround(rem / bi)));
            for (int dn = -1; dn <= 1; ++dn) {
                const int n = n0 + dn;
                if (n < 0) continue;
                const Cplx loc(0.0, sign * (half + m * b + n * bi));
                const double d = std::abs(z - loc);
                if (d < best) {
                    best = d;
                    bestPt.m = m;
                    bestPt.n = n;
                    bestPt.kind = sign > 0 ? PoleLatticePoint::Kind::pole
                                           : PoleLatticePoint::Kind::zero;
                    bestPt.location = loc;
                }
            }
        }
    }
    return bestPt;
}

double phi_singularity_distance(Cplx z, const ModularParameter& P)
{
    const double x = std::abs(z.real());
    const double up = lattice_gap(z.imag() - P.strip(), P);
    const double dn = lattice_gap(-z.imag() - P.strip(), P);
    const double dy = std::min(up, dn);
    return std::hypot(x, dy);
}

double c_singularity_distance(Cplx z, const ModularParameter& P)
{
    // poles at -i(m b + n / b); zeros at +i(B + m b + n / b)
    const double x = std::abs(z.real());
    const double dpole = lattice_gap(-z.imag(), P);
    const double dzero = lattice_gap(z.imag() - P.big_b(), P);
    return std::hypot(x, std::min(dpole, dzero));
}

// ---------------------------------------------------------------------------
// c-function and residue probes.
// ---------------------------------------------------------------------------

Cplx log_c_function(Cplx z, const ModularParameter& P, double tol)
{
    const Cplx w = z - P.c_b();
    return -P.log_zeta() + iu * (0.5 * pi) * (w * w - P.c_b() * P.c_b()) -
           log_phi(w, P, tol);
}

Cplx c_function(Cplx z, const ModularParameter& P, double tol, double delta_override)
{
    const double delta = delta_override >= 0.0 ? delta_override : P.delta_pole();
    if (c_singularity_distance(z, P) < delta)
        throw PoleProximity("c evaluated within delta_pole of a pole or zero");
    return std::exp(log_c_function(z, P, tol));
}

double phi_pole_residue_check(const ModularParameter& P, double tol, Cplx eps)
{
    const Cplx val = std::exp(log_phi(eps + P.c_b(), P, tol));
    return std::abs(2.0 * pi * iu * P.zeta() * eps * val - 1.0);
}

Cplx phi_zero_probe(const ModularParameter& P, double tol, Cplx eps)
{
    const Cplx val = std::exp(log_phi(eps - P.c_b(), P, tol));
    return P.zeta() * val / (2.0 * pi * iu * eps);
}

} // namespace qwhit
