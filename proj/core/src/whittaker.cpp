#include "qwhit/whittaker.hpp"

#include <algorithm>
#include <cmath>

#include "qwhit/quantum_dilog.hpp"

namespace qwhit {

namespace {

void require_ranks(const SpectralVector& lambda, const CoordinateVector& x)
{
    if (lambda.empty() || lambda.size() != x.size())
        throw Error("whittaker: spectral and coordinate ranks must match");
    if (lambda.size() > 3)
        throw RankUnsupported("whittaker: ranks above 3 are not supported");
}

long long budget_for(size_t dim, long long user)
{
    if (user > 0) return user;
    if (dim <= 1) return 200'000;
    if (dim == 2) return 10'000'000;
    return 500'000'000;
}

} // namespace

// ---------------------------------------------------------------------------
// Rank 2.
// ---------------------------------------------------------------------------

Whittaker2::Whittaker2(Cplx lambda1, Cplx lambda2, const ModularParameter& P,
                       double tol, double epsilon, bool enable_cache)
    : l1_(lambda1), l2_(lambda2), P_(P), tol_(tol),
      eps_(epsilon < 0.0 ? 0.5 * P.strip() : epsilon), cache_enabled_(enable_cache)
{
}

ContourPath Whittaker2::j_contour(Cplx w, double eps_pref) const
{
    const double B = P_.big_b();
    // Horizontal level h must satisfy, with margins:
    //   pole separation: above the descending ladder at 0, below the
    //   ascending ladder at w + c_b;
    //   ray decay:       Im w < h < B/2.
    const double lo = std::max(0.0, w.imag());
    const double hi = std::min(0.5 * B, w.imag() + 0.5 * B);
    const double margin = 0.04 * B;
    if (hi - lo > 2.0 * margin) {
        const double h = std::clamp(eps_pref, lo + margin, hi - margin);
        return ContourPath::horizontal(h);
    }

    // Collapsed window: pass above the origin ladder and below the ladder at
    // w + c_b at their respective real positions, escaping along downward
    // slopes so that the quadratic phases give Gaussian ray decay.
    const double clr = 0.08 * B;
    const double hA = clr;                    // height near Re = 0
    const double hB = w.imag() + 0.5 * B - clr; // height near Re = w
    if (std::abs(w.real()) < 4.0 * clr && hB < hA)
        throw NoSeparatingPath("rank-2 difference variable pinches the contour");
    std::vector<Cplx> verts;
    const double xa = 0.0, xb = w.real();
    const double pad = 0.75;
    if (xa < xb) {
        verts = {Cplx(xa - pad, hA), Cplx(xa + 0.25 * (xb - xa), hA),
                 Cplx(xb - 0.25 * (xb - xa), hB), Cplx(xb + pad, hB)};
    } else if (xb < xa) {
        verts = {Cplx(xb - pad, hB), Cplx(xb + 0.25 * (xa - xb), hB),
                 Cplx(xa - 0.25 * (xa - xb), hA), Cplx(xa + pad, hA)};
    } else {
        verts = {Cplx(xa - pad, hA), Cplx(xa + pad, hA)};
    }
    return ContourPath(std::move(verts), -0.5, -0.5);
}

Cplx Whittaker2::J_direct(Cplx w, double epsilon_override) const
{
    const double pref = epsilon_override > 0.0 ? epsilon_override : eps_;
    const ContourPath path = j_contour(w, pref);
    const Cplx dl = l1_ - l2_;
    IntegrateOptions opts;
    opts.tol = tol_;
    opts.budget = 400'000;
    opts.abs_floor = 2.0 * tol_ * j_peak_.load(std::memory_order_relaxed);
    auto f = [&](Cplx s) {
        return std::exp(2.0 * pi * iu * s * dl - log_phi(s - P_.c_b(), P_) -
                        log_phi(w - s, P_));
    };
    const Cplx v = integrate(f, path, opts).value;
    double mag = std::abs(v);
    double cur = j_peak_.load(std::memory_order_relaxed);
    while (mag > cur &&
           !j_peak_.compare_exchange_weak(cur, mag, std::memory_order_relaxed)) {
    }
    return v;
}

Cplx Whittaker2::J(Cplx w) const
{
    if (!cache_enabled_) return J_direct(w);
    const long long key = std::llround(w.imag() * 1e9);
    std::unique_lock<std::mutex> lock(mu_);
    LineCache& lc = lines_[key];
    ++lc.hits;
    if (lc.built && w.real() >= lc.lo && w.real() <= lc.hi) {
        Cplx v = lc.interp(w.real());
        return v;
    }
    const bool rebuild =
        (!lc.built && lc.hits >= 12) || (lc.built && lc.hits >= 12);
    if (rebuild) {
        const double reach = std::max(6.0, std::abs(w.real()) + 4.0);
        const double lo = lc.built ? std::min(lc.lo, -reach) : -reach;
        const double hi = lc.built ? std::max(lc.hi, reach) : reach;
        const double im = w.imag();
        lock.unlock(); // the build takes a while; J_direct is reentrant
        Cheb1 interp = Cheb1::adaptive(
            [&](double re) { return J_direct(Cplx(re, im)); }, lo, hi, tol_ * 0.2,
            128, 2048);
        lock.lock();
        lc.interp = std::move(interp);
        lc.built = true;
        lc.lo = lo;
        lc.hi = hi;
        return lc.interp(w.real());
    }
    lock.unlock();
    return J_direct(w);
}

Cplx Whittaker2::operator()(Cplx x1, Cplx x2) const
{
    const Cplx phase = -P_.log_zeta() + pi * iu * P_.c_b() * (l2_ - l1_) +
                       2.0 * pi * iu * (l1_ * x1 + l2_ * x2);
    return std::exp(phase) * J(x2 - x1);
}

// ---------------------------------------------------------------------------
// Rank 3 via the triangular-array integral.
// ---------------------------------------------------------------------------

namespace {

Cplx whittaker3_givental(const SpectralVector& l, const CoordinateVector& x,
                         const ModularParameter& P, const WhittakerOptions& opts)
{
    const double eps = opts.resolved_epsilon(P);
    const double eps_row2 = 0.5 * eps; // offsets decrease toward the
                                       // coordinate row
    const double inner_tol = std::max(opts.tol * 1e-2, 1e-11);
    Whittaker2 inner(l[0], l[1], P, inner_tol, eps, /*cache=*/true);

    const Cplx cb = P.c_b();
    const Cplx pref = std::exp(pi * iu * cb * (2.0 * l[2] - l[0] - l[1]) -
                               2.0 * P.log_zeta());
    const Cplx xsum = x[0] + x[1] + x[2];

    NestedOptions nopts;
    nopts.tol = opts.tol;
    nopts.budget = budget_for(3, opts.budget);
    nopts.integrand_noise = 4.0 * inner_tol;
    std::vector<ContourPath> paths = {ContourPath::horizontal(eps_row2),
                                      ContourPath::horizontal(eps_row2)};
    auto f = [&](std::span<const Cplx> y) -> Cplx {
        const Cplx y1 = y[0], y2 = y[1];
        const Cplx logk = 2.0 * pi * iu * l[2] * (xsum - y1 - y2) +
                          log_phi(y2 - y1, P) - log_phi(y1 - x[0] - cb, P) -
                          log_phi(y2 - x[1] - cb, P) - log_phi(x[1] - y1, P) -
                          log_phi(x[2] - y2, P);
        // |Psi2| is bounded on the contour; once the kernel underflows the
        // eigenfunction is not worth evaluating.
        if (logk.real() < -60.0) return 0.0;
        return std::exp(logk) * inner(y1, y2);
    };
    return pref * integrate_nested(f, paths, nopts).value;
}

// psi^{(n+1)} from psi^{(n)}: spectral integral against the kernel L_n and
// the Sklyanin density, along (R - i eps_m)^n below the c-function ladders.
Cplx psi_mb(const SpectralVector& lambda, const CoordinateVector& x,
            const ModularParameter& P, const WhittakerOptions& opts);

// The spectral contour runs below every c-function ladder anchored at the
// lambda entries; when the recursion nests, each level shifts one step
// further down.
double mb_contour_depth(const SpectralVector& l, const ModularParameter& P)
{
    double min_im = 0.0;
    for (const Cplx& z : l) min_im = std::min(min_im, z.imag());
    return 0.25 * P.strip() - min_im;
}

Cplx psi_mb_rank2(const SpectralVector& l, const CoordinateVector& x,
                  const ModularParameter& P, const WhittakerOptions& opts)
{
    const double em = mb_contour_depth(l, P);
    IntegrateOptions io;
    io.tol = opts.tol;
    io.budget = budget_for(1, opts.budget);
    io.abs_floor = opts.abs_floor;
    auto f = [&](Cplx mu) {
        return mb_kernel({mu}, l, x[1], P, opts.tol) *
               std::exp(2.0 * pi * iu * mu * x[0]);
    };
    return integrate(f, ContourPath::horizontal(-em), io).value;
}

Cplx psi_mb_rank3(const SpectralVector& l, const CoordinateVector& x,
                  const ModularParameter& P, const WhittakerOptions& opts)
{
    const double em = mb_contour_depth(l, P);
    WhittakerOptions inner = opts;
    inner.tol = std::max(opts.tol * 1e-2, 1e-11);
    NestedOptions nopts;
    nopts.tol = opts.tol;
    nopts.budget = budget_for(2, opts.budget) * 4;
    nopts.integrand_noise = 4.0 * inner.tol;
    std::vector<ContourPath> paths = {ContourPath::horizontal(-em),
                                      ContourPath::horizontal(-em)};
    double psi_peak = 0.0;
    auto f = [&](std::span<const Cplx> mu) -> Cplx {
        SpectralVector m2 = {mu[0], mu[1]};
        const Cplx measure = sklyanin_m(m2, P);
        if (measure == 0.0) return 0.0;
        const Cplx kern = mb_kernel(m2, l, x[2], P, opts.tol);
        if (std::abs(kern) * std::abs(measure) < 1e-40) return 0.0;
        WhittakerOptions in2 = inner;
        in2.abs_floor = 0.5 * inner.tol * psi_peak;
        const Cplx psi = psi_mb(m2, {x[0], x[1]}, P, in2);
        psi_peak = std::max(psi_peak, std::abs(psi));
        return kern * psi * measure;
    };
    return integrate_nested(f, paths, nopts).value;
}

Cplx psi_mb(const SpectralVector& lambda, const CoordinateVector& x,
            const ModularParameter& P, const WhittakerOptions& opts)
{
    switch (lambda.size()) {
    case 1:
        return std::exp(2.0 * pi * iu * lambda[0] * x[0]);
    case 2:
        return psi_mb_rank2(lambda, x, P, opts);
    default:
        return psi_mb_rank3(lambda, x, P, opts);
    }
}

Cplx mb_normalization(const SpectralVector& lambda)
{
    Cplx s = 0.0;
    for (Cplx l : lambda) s += l * l;
    const double n = static_cast<double>(lambda.size());
    return std::exp(pi * iu * (0.5 * (1.0 - n)) * s);
}

} // namespace

// ---------------------------------------------------------------------------
// Public entry points.
// ---------------------------------------------------------------------------

Cplx whittaker(const SpectralVector& lambda, const CoordinateVector& x,
               const ModularParameter& P, const WhittakerOptions& opts)
{
    require_ranks(lambda, x);
    const size_t n = lambda.size();
    if (n == 1) return std::exp(2.0 * pi * iu * lambda[0] * x[0]);

    if (opts.method == WhittakerOptions::Method::mellin_barnes)
        return psi_mb(lambda, x, P, opts) / mb_normalization(lambda);

    if (n == 2) {
        Whittaker2 w2(lambda[0], lambda[1], P, opts.tol,
                      opts.resolved_epsilon(P), /*cache=*/false);
        return w2(x[0], x[1]);
    }
    return whittaker3_givental(lambda, x, P, opts);
}

Cplx whittaker_mb_normalized(const SpectralVector& lambda, const CoordinateVector& x,
                             const ModularParameter& P, const WhittakerOptions& opts)
{
    require_ranks(lambda, x);
    if (opts.method == WhittakerOptions::Method::mellin_barnes)
        return psi_mb(lambda, x, P, opts);
    return mb_normalization(lambda) * whittaker(lambda, x, P, opts);
}

Cplx mb_kernel(const SpectralVector& mu, const SpectralVector& lambda, Cplx x_next,
               const ModularParameter& P, double tol)
{
    const size_t n = mu.size();
    if (lambda.size() != n + 1)
        throw Error("mb_kernel: lambda must have one more entry than mu");
    const Cplx musum = vec_sum(mu);
    const Cplx lsum = vec_sum(lambda);
    Cplx logk = -static_cast<double>(n) * P.log_zeta() +
                pi * iu * (2.0 * x_next - musum) * (lsum - musum);
    for (const Cplx& l : lambda)
        for (const Cplx& m : mu) {
            if (c_singularity_distance(l - m, P) < P.delta_pole())
                throw PoleProximity("mb_kernel: lambda - mu on the c-function lattice");
            logk += log_c_function(l - m, P, tol);
        }
    return std::exp(logk);
}

Cplx asymptotic_estimate(const SpectralVector& lambda, const CoordinateVector& x,
                         const ModularParameter& P)
{
    require_ranks(lambda, x);
    const size_t n = lambda.size();
    Cplx pair_phase = 0.0;
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
            const Cplx d = lambda[j] - lambda[k];
            pair_phase += 0.5 * pi * iu * d * d;
        }
    std::vector<size_t> perm(n);
    for (size_t j = 0; j < n; ++j) perm[j] = j;
    Cplx total = 0.0;
    do {
        Cplx lg = pair_phase;
        for (size_t j = 0; j < n; ++j) lg += 2.0 * pi * iu * x[j] * lambda[perm[j]];
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                const Cplx d = lambda[perm[k]] - lambda[perm[j]];
                if (c_singularity_distance(d, P) < P.delta_pole())
                    throw PoleProximity("asymptotic_estimate: coinciding spectra");
                lg += log_c_function(d, P);
            }
        total += std::exp(lg);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace qwhit
