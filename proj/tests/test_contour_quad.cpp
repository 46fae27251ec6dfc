#include <doctest.h>

#include <random>

#include "qwhit/quadrature.hpp"
#include "qwhit/quantum_dilog.hpp"

using namespace qwhit;

TEST_CASE("gaussian on the real line and on shifted lines")
{
    auto f = [](Cplx t) { return std::exp(-pi * t * t); };
    IntegrateOptions opts;
    opts.tol = 1e-12;

    auto r0 = integrate(f, ContourPath::horizontal(0.0), opts);
    CHECK(std::abs(r0.value - 1.0) < 1e-12);
    CHECK(r0.evaluations >= 1);
    CHECK(std::isfinite(r0.abs_error));

    auto r3 = integrate(f, ContourPath::horizontal(0.3), opts);
    CHECK(std::abs(r3.value - 1.0) < 1e-12);

    // contour-shift invariance within a strip, including a path with corners
    ContourPath bent({Cplx(-2.0, 0.1), Cplx(0.5, -0.2), Cplx(1.5, 0.05)});
    auto rb = integrate(f, bent, opts);
    CHECK(std::abs(rb.value - 1.0) < 2.0 * (r0.abs_error + rb.abs_error) + 1e-12);
}

TEST_CASE("oscillatory gaussian and closed forms")
{
    IntegrateOptions opts;
    opts.tol = 1e-12;
    // int exp(-pi t^2 + 2 pi i w t) dt = exp(-pi w^2)
    for (double w : {0.5, 1.7}) {
        auto f = [&](Cplx t) { return std::exp(-pi * t * t + 2.0 * pi * iu * w * t); };
        auto r = integrate(f, ContourPath::horizontal(0.0), opts);
        CHECK(std::abs(r.value - std::exp(-pi * w * w)) < 1e-10);
    }
}

TEST_CASE("sloped rays recover a fresnel-type integral")
{
    // int exp(pi i t^2) dt = e^{i pi/4}; the integrand does not decay on
    // horizontal rays, so the path must escape along rotated directions.
    IntegrateOptions opts;
    opts.tol = 1e-10;
    ContourPath tilted({Cplx(-1.0, -1.0), Cplx(1.0, 1.0)}, 1.0, 1.0);
    auto f = [](Cplx t) { return std::exp(iu * pi * t * t); };
    auto r = integrate(f, tilted, opts);
    CHECK(std::abs(r.value - expi(pi / 4.0)) < 1e-9);
}

TEST_CASE("non-decaying tails are rejected")
{
    IntegrateOptions opts;
    opts.tol = 1e-10;
    opts.max_blocks = 24;
    auto f = [](Cplx t) { return std::exp(iu * 2.0 * pi * t) / (1.0 + t * t * 1e-4); };
    CHECK_THROWS_AS(integrate(f, ContourPath::horizontal(0.0), opts), NonDecayingTail);
}

TEST_CASE("budget is enforced")
{
    IntegrateOptions opts;
    opts.tol = 1e-14;
    opts.budget = 40;
    auto f = [](Cplx t) { return std::exp(-pi * t * t) * std::cos(40.0 * t.real()); };
    CHECK_THROWS_AS(integrate(f, ContourPath::horizontal(0.0), opts), BudgetExceeded);
}

TEST_CASE("fourier transform of the dilogarithm at a known point")
{
    // zeta phi(w) = int exp(2 pi i x (w - c_b)) / phi(x - c_b) dx along a
    // path passing above the origin and dipping below the axis on the right.
    ModularParameter P(1.0);
    const Cplx w(0.2, 0.0);
    const double d = 0.25 * P.b_min();
    ContourPath path({Cplx(-1.0, d), Cplx(1.0, d), Cplx(2.0, -d)});
    IntegrateOptions opts;
    opts.tol = 1e-10;
    opts.budget = 400'000;
    auto f = [&](Cplx x) {
        return std::exp(2.0 * pi * iu * x * (w - P.c_b()) - log_phi(x - P.c_b(), P));
    };
    auto r = integrate(f, path, opts);
    CHECK(rel_dev(r.value, P.zeta() * phi(w, P)) < 1e-8);
}

TEST_CASE("nested integration: product of gaussians and cross-check")
{
    NestedOptions opts;
    opts.tol = 1e-9;
    std::vector<ContourPath> paths = {ContourPath::horizontal(0.0),
                                      ContourPath::horizontal(0.0)};
    auto f = [](std::span<const Cplx> z) {
        return std::exp(-pi * (z[0] * z[0] + z[1] * z[1]));
    };
    auto r = integrate_nested(f, paths, opts);
    CHECK(std::abs(r.value - 1.0) < 1e-8);

    // nesting consistency: separable integrand equals product of 1-D results
    auto g1 = integrate([](Cplx t) { return std::exp(-pi * t * t + t); },
                        ContourPath::horizontal(0.0), {});
    auto g2 = integrate([](Cplx t) { return std::exp(-pi * t * t - 0.5 * t); },
                        ContourPath::horizontal(0.0), {});
    auto fg = [](std::span<const Cplx> z) {
        return std::exp(-pi * (z[0] * z[0] + z[1] * z[1]) + z[0] - 0.5 * z[1]);
    };
    auto rg = integrate_nested(fg, paths, opts);
    CHECK(rel_dev(rg.value, g1.value * g2.value) < 1e-7);
}

TEST_CASE("error estimates are honest on a closed-form corpus")
{
    auto rng = std::mt19937_64(20240601);
    std::uniform_real_distribution<double> ua(0.4, 2.0);
    std::uniform_real_distribution<double> uw(-1.5, 1.5);
    int total = 0, ok = 0;
    IntegrateOptions opts;
    opts.tol = 1e-9;
    for (int i = 0; i < 40; ++i) {
        const double a = ua(rng), w = uw(rng);
        auto f = [&](Cplx t) { return std::exp(-a * pi * t * t + 2.0 * pi * iu * w * t); };
        const Cplx truth = std::exp(-pi * w * w / a) / std::sqrt(a);
        auto r = integrate(f, ContourPath::horizontal(0.0), opts);
        ++total;
        if (std::abs(r.value - truth) <= 5.0 * std::max(r.abs_error, 1e-16)) ++ok;
    }
    CHECK(ok * 100 >= total * 95);
}

TEST_CASE("separating contour")
{
    ModularParameter P(1.0);
    const double delta = 1e-6;

    // one-sided: anchors above, default 0 keeps a horizontal line
    auto one = separating_contour({Cplx(0.3, 0.9)}, {}, 0.0, delta);
    CHECK(one.vertices().size() == 1);
    CHECK(one.left_offset() == doctest::Approx(0.0));

    // anchors already separated by the default level
    auto easy = separating_contour({Cplx(0.5, 0.1)}, {Cplx(-0.5, -0.1)}, 0.0, delta);
    CHECK(easy.vertices().size() == 1);

    // default level must move between the families
    auto moved = separating_contour({Cplx(0.0, 0.5)}, {Cplx(2.0, 0.2)}, 0.0, delta);
    CHECK(moved.vertices().size() == 1);
    CHECK(moved.left_offset() > 0.2);
    CHECK(moved.left_offset() < 0.5);

    // a genuine detour: below-anchor under the level forced by an above-anchor
    auto detour = separating_contour({Cplx(-1.0, -0.3)}, {Cplx(1.5, 0.2)}, 0.0, delta);
    CHECK(detour.vertices().size() > 1);

    // impossible: below-anchor strictly under an above-anchor at the same Re
    CHECK_THROWS_AS(
        separating_contour({Cplx(0.0, -0.2)}, {Cplx(0.0, 0.2)}, 0.0, delta),
        NoSeparatingPath);
}
