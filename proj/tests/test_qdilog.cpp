#include <doctest.h>

#include <random>

#include "qwhit/quadrature.hpp"
#include "qwhit/quantum_dilog.hpp"

using namespace qwhit;

namespace {

// Independent oracle for the c-function: its own principal-value integral,
// evaluated as the average of the contours passing above and below the
// origin.  Valid in the strip 0 < Im z < B.
Cplx c_pv_integral(Cplx z, const ModularParameter& P)
{
    const double b = P.b();
    const double r = std::min(0.8, 0.6 * pi * P.b_min());
    auto h = [&](Cplx t) -> Cplx {
        return std::exp(-iu * z * t) /
               ((std::exp(b * t) - 1.0) * (std::exp(t / b) - 1.0) * t);
    };
    // folded rays: h(t) + h(-t) on [r, inf), truncated by the decay rate
    const double rate = std::min(P.big_b() - z.imag(), z.imag());
    const double T = r + 40.0 / rate;
    auto folded = [&](Cplx t) { return h(t) + h(-t); };
    Cplx rays = integrate_segment(folded, Cplx(r, 0), Cplx(T, 0), 1e-13, 1e-14).value;

    auto arc = [&](double th0, double th1) {
        return integrate_segment(
                   [&](Cplx th) {
                       const Cplx t = r * expi(th.real());
                       return h(t) * iu * t;
                   },
                   Cplx(th0, 0), Cplx(th1, 0), 1e-13, 1e-14)
            .value;
    };
    const Cplx above = -arc(0.0, pi);
    const Cplx below = arc(pi, 2.0 * pi);
    const Cplx pv = rays + 0.5 * (above + below);
    return std::exp(-pv);
}

std::mt19937_64 rng_for(const char* name)
{
    std::seed_seq seq(name, name + std::char_traits<char>::length(name));
    return std::mt19937_64(seq);
}

} // namespace

TEST_CASE("modular constants")
{
    CHECK_THROWS_AS(ModularParameter(-1.0), Error);
    CHECK_THROWS_AS(ModularParameter(0.0), Error);

    for (double b : {0.6, 1.0, 1.3}) {
        ModularParameter P(b);
        // c_b^2 is the negative real -(b+1/b)^2/4
        const Cplx cb2 = P.c_b() * P.c_b();
        CHECK(std::abs(cb2.imag()) < 1e-15);
        CHECK(cb2.real() == doctest::Approx(-0.25 * P.big_b() * P.big_b()));
        CHECK(std::abs(P.q()) == doctest::Approx(1.0));
        CHECK(std::abs(P.zeta()) == doctest::Approx(1.0));

        // the constants are invariant under b <-> 1/b
        ModularParameter Pd(1.0 / b);
        CHECK(std::abs(P.c_b() - Pd.c_b()) < 1e-14);
        CHECK(std::abs(P.zeta() - Pd.zeta()) < 1e-14);
        CHECK(std::abs(P.zeta_inv() - Pd.zeta_inv()) < 1e-14);
    }
}

TEST_CASE("defining integral matches fast evaluator in the strip")
{
    auto rng = rng_for("fast-vs-integral");
    for (double b : {0.6, 1.0, 1.3}) {
        ModularParameter P(b);
        std::uniform_real_distribution<double> ux(-6.0, 6.0);
        std::uniform_real_distribution<double> uy(-0.45, 0.45);
        for (int i = 0; i < 12; ++i) {
            const Cplx z(ux(rng), uy(rng) * P.big_b());
            const Cplx ref = std::exp(log_phi_integral(z, P, 1e-14));
            const Cplx fast = phi(z, P);
            CHECK(rel_dev(ref, fast) < 5e-12);
        }
    }
}

TEST_CASE("phi(0)^2 equals zeta_inv, both routes")
{
    for (double b : {0.6, 1.0, 1.3}) {
        ModularParameter P(b);
        const Cplx p0 = std::exp(log_phi_integral(0.0, P, 1e-14));
        CHECK(rel_dev(p0 * p0, P.zeta_inv()) < 1e-12);
        const Cplx p0fast = phi(Cplx(0, 0), P);
        CHECK(rel_dev(p0fast * p0fast, P.zeta_inv()) < 1e-11);
    }
}

TEST_CASE("unitarity, inversion, functional equations, duality")
{
    auto rng = rng_for("phi-properties");
    std::uniform_real_distribution<double> ux(-8.0, 8.0);
    std::uniform_real_distribution<double> uy(-2.5, 2.5);
    for (double b : {0.6, 1.0, 1.3}) {
        ModularParameter P(b);
        ModularParameter Pd(1.0 / b);
        for (int i = 0; i < 40; ++i) {
            const double x = ux(rng);
            // unitarity on the real axis
            CHECK(std::abs(std::abs(phi(Cplx(x, 0), P)) - 1.0) < 1e-11);

            Cplx z(ux(rng), uy(rng));
            if (phi_singularity_distance(z, P) < 1e-2) continue;
            // inversion
            const Cplx lhs = std::exp(log_phi(z, P) + log_phi(-z, P));
            const Cplx rhs = P.zeta_inv() * std::exp(iu * pi * z * z);
            CHECK(rel_dev(lhs, rhs) < 1e-10);
            // functional equations, both exponents
            for (double e : {P.b(), 1.0 / P.b()}) {
                const Cplx l = phi(z - iu * (0.5 * e), P);
                const Cplx r =
                    (1.0 + std::exp(2.0 * pi * e * z)) * phi(z + iu * (0.5 * e), P);
                CHECK(rel_dev(l, r) < 1e-10);
            }
            // modular duality
            CHECK(rel_dev(phi(z, P), phi(z, Pd)) < 1e-11);
        }
    }
}

TEST_CASE("asymptotic behavior on the real axis")
{
    for (double b : {0.6, 1.0}) {
        ModularParameter P(b);
        const double R = 5.0 * P.big_b();
        const Cplx right = phi(Cplx(R, 0), P);
        const Cplx gauss = P.zeta_inv() * std::exp(iu * pi * R * R);
        CHECK(std::abs(right - gauss) < 1e-8);
        const Cplx left = phi(Cplx(-R, 0), P);
        CHECK(std::abs(left - 1.0) < 1e-8);
    }
}

TEST_CASE("pole and zero probes")
{
    for (double b : {1.0, 0.6}) {
        ModularParameter P(b);
        CHECK(phi_pole_residue_check(P) < 1e-3);
        CHECK(std::abs(phi_zero_probe(P) - (-1.0)) < 1e-3);
    }
}

TEST_CASE("pole proximity guard")
{
    ModularParameter P(1.0);
    CHECK_THROWS_AS(phi(P.c_b() + Cplx(1e-9, 0), P), PoleProximity);
    CHECK_THROWS_AS(phi(-P.c_b() + Cplx(0, 1e-9), P), PoleProximity);
    // explicit override admits near-pole probes
    CHECK_NOTHROW(phi(P.c_b() + Cplx(1e-4, 1e-4), P, 1e-9, 1e-6));
    CHECK_THROWS_AS(c_function(Cplx(1e-9, 0), P), PoleProximity);
}

TEST_CASE("singularity lattice")
{
    ModularParameter P(0.8);
    auto p = nearest_phi_singularity(P.c_b() + Cplx(0.01, 0.0), P);
    CHECK(p.kind == PoleLatticePoint::Kind::pole);
    CHECK(p.m == 0);
    CHECK(p.n == 0);
    CHECK(std::abs(p.location - P.c_b()) < 1e-14);

    const Cplx deep = -(P.c_b() + iu * (2 * P.b() + 1 / P.b()));
    auto zpt = nearest_phi_singularity(deep, P);
    CHECK(zpt.kind == PoleLatticePoint::Kind::zero);
    CHECK(std::abs(zpt.location - deep) < 1e-12);
    CHECK(phi_singularity_distance(deep + Cplx(0.3, 0), P) == doctest::Approx(0.3));
}

TEST_CASE("c-function properties")
{
    auto rng = rng_for("c-properties");
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    std::uniform_real_distribution<double> uy(-1.0, 1.0);
    for (double b : {0.6, 1.0, 1.3}) {
        ModularParameter P(b);
        for (int i = 0; i < 15; ++i) {
            Cplx z(ux(rng), uy(rng));
            if (c_singularity_distance(z, P) < 5e-2 ||
                c_singularity_distance(2.0 * P.c_b() - z, P) < 5e-2)
                continue;
            // inversion
            CHECK(rel_dev(c_function(z, P) * c_function(2.0 * P.c_b() - z, P), 1.0) <
                  1e-10);
            // complex conjugation
            CHECK(rel_dev(std::conj(c_function(z, P)),
                          c_function(-std::conj(z), P)) < 1e-10);
            // functional equations
            for (double e : {P.b(), 1.0 / P.b()}) {
                if (c_singularity_distance(z + iu * e, P) < 5e-2) continue;
                const Cplx l = c_function(z + iu * e, P);
                const Cplx r = (std::exp(-pi * e * z) - std::exp(pi * e * z)) * iu *
                               c_function(z, P);
                CHECK(rel_dev(l, r) < 1e-10);
            }
        }
        // pole behavior at the origin: z c(z) -> -1/(2 pi i)
        for (double s : {1e-3, 1e-4}) {
            const Cplx z(s, s);
            const Cplx val = z * c_function(z, P, 1e-9, 1e-6);
            CHECK(std::abs(val - (-1.0 / (2.0 * pi * iu))) < 1e-2 * std::abs(val) + 1e-3);
        }
    }
}

TEST_CASE("c-function against its own principal-value integral")
{
    auto rng = rng_for("c-pv-oracle");
    for (double b : {0.71, 1.0}) {
        ModularParameter P(b);
        std::uniform_real_distribution<double> ux(-1.5, 1.5);
        std::uniform_real_distribution<double> uy(0.25, 0.75);
        for (int i = 0; i < 4; ++i) {
            const Cplx z(ux(rng), uy(rng) * P.big_b());
            const Cplx oracle = c_pv_integral(z, P);
            const Cplx val = c_function(z, P);
            CHECK(rel_dev(oracle, val) < 1e-10);
        }
    }
}
