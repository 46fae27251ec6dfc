#ifndef QWHIT_CHEBYSHEV_HPP
#define QWHIT_CHEBYSHEV_HPP

#include <functional>
#include <vector>

#include "qwhit/complex_util.hpp"
#include "qwhit/errors.hpp"

namespace qwhit {

namespace detail {

// Chebyshev-Lobatto nodes t_j = cos(pi j / n), j = 0..n.
inline std::vector<double> lobatto_nodes(int n)
{
    std::vector<double> t(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) t[static_cast<size_t>(j)] = std::cos(pi * j / n);
    return t;
}

// Coefficients of sum c_k T_k interpolating values at Lobatto nodes.
inline std::vector<Cplx> lobatto_coeffs(const std::vector<Cplx>& v)
{
    const int n = static_cast<int>(v.size()) - 1;
    std::vector<Cplx> c(v.size());
    for (int k = 0; k <= n; ++k) {
        Cplx s = 0.5 * (v[0] + (k % 2 == 0 ? v[static_cast<size_t>(n)]
                                           : -v[static_cast<size_t>(n)]));
        for (int j = 1; j < n; ++j)
            s += v[static_cast<size_t>(j)] * std::cos(pi * j * k / n);
        c[static_cast<size_t>(k)] = (2.0 / n) * s;
    }
    c[0] *= 0.5;
    c[static_cast<size_t>(n)] *= 0.5;
    return c;
}

inline Cplx clenshaw(const std::vector<Cplx>& c, double t)
{
    Cplx b1{}, b2{};
    for (size_t k = c.size(); k-- > 1;) {
        Cplx b0 = c[k] + 2.0 * t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c[0] + t * b1 - b2;
}

} // namespace detail

// Chebyshev interpolant of a complex-valued function on a real interval.
class Cheb1 {
public:
    Cheb1() = default;

    Cheb1(const std::function<Cplx(double)>& f, double a, double b, int n)
        : a_(a), b_(b)
    {
        auto t = detail::lobatto_nodes(n);
        std::vector<Cplx> v(t.size());
        for (size_t j = 0; j < t.size(); ++j) v[j] = f(from_unit(t[j]));
        coef_ = detail::lobatto_coeffs(v);
    }

    // Doubles the degree until the relative tail mass drops below tol.
    static Cheb1 adaptive(const std::function<Cplx(double)>& f, double a, double b,
                          double tol, int n0 = 32, int nmax = 2048)
    {
        for (int n = n0; n <= nmax; n *= 2) {
            Cheb1 c(f, a, b, n);
            if (c.tail_ok(tol) || n * 2 > nmax) return c;
        }
        return Cheb1(f, a, b, nmax);
    }

    Cplx operator()(double x) const { return detail::clenshaw(coef_, to_unit(x)); }

    double a() const { return a_; }
    double b() const { return b_; }
    bool contains(double x) const { return x >= a_ && x <= b_; }
    const std::vector<Cplx>& coefficients() const { return coef_; }

    bool tail_ok(double tol) const
    {
        double peak = 0.0;
        for (const Cplx& c : coef_) peak = std::max(peak, std::abs(c));
        if (peak == 0.0) return true;
        const size_t n = coef_.size();
        double tail = 0.0;
        for (size_t k = n - n / 8 - 1; k < n; ++k) tail = std::max(tail, std::abs(coef_[k]));
        return tail <= tol * peak;
    }

private:
    double to_unit(double x) const { return (2.0 * x - a_ - b_) / (b_ - a_); }
    double from_unit(double t) const { return 0.5 * ((b_ - a_) * t + a_ + b_); }

    double a_ = -1.0, b_ = 1.0;
    std::vector<Cplx> coef_;
};

// Tensor-product Chebyshev interpolant on a rectangle.
class Cheb2 {
public:
    Cheb2() = default;

    Cheb2(const std::function<Cplx(double, double)>& f, double ax, double bx,
          double ay, double by, int nx, int ny)
        : ax_(ax), bx_(bx), ay_(ay), by_(by), ny_(ny)
    {
        auto tx = detail::lobatto_nodes(nx);
        auto ty = detail::lobatto_nodes(ny);
        std::vector<std::vector<Cplx>> rows(tx.size());
        for (size_t i = 0; i < tx.size(); ++i) {
            std::vector<Cplx> v(ty.size());
            const double x = 0.5 * ((bx_ - ax_) * tx[i] + ax_ + bx_);
            for (size_t j = 0; j < ty.size(); ++j)
                v[j] = f(x, 0.5 * ((by_ - ay_) * ty[j] + ay_ + by_));
            rows[i] = detail::lobatto_coeffs(v); // y-direction transform
        }
        // x-direction transform per y-coefficient column
        coef_.assign(tx.size(), std::vector<Cplx>(ty.size()));
        std::vector<Cplx> col(tx.size());
        for (size_t j = 0; j < ty.size(); ++j) {
            for (size_t i = 0; i < tx.size(); ++i) col[i] = rows[i][j];
            auto cc = detail::lobatto_coeffs(col);
            for (size_t i = 0; i < tx.size(); ++i) coef_[i][j] = cc[i];
        }
    }

    Cplx operator()(double x, double y) const
    {
        const double tx = (2.0 * x - ax_ - bx_) / (bx_ - ax_);
        const double ty = (2.0 * y - ay_ - by_) / (by_ - ay_);
        std::vector<Cplx> s(coef_.size());
        for (size_t i = 0; i < coef_.size(); ++i) s[i] = detail::clenshaw(coef_[i], ty);
        return detail::clenshaw(s, tx);
    }

    bool contains(double x, double y) const
    {
        return x >= ax_ && x <= bx_ && y >= ay_ && y <= by_;
    }

    // Largest coefficient magnitude in the top eighth of either index range,
    // relative to the overall peak; used for a-posteriori accuracy checks.
    double tail_fraction() const
    {
        double peak = 0.0, tail = 0.0;
        const size_t nx = coef_.size(), ny = coef_[0].size();
        for (size_t i = 0; i < nx; ++i)
            for (size_t j = 0; j < ny; ++j) {
                const double m = std::abs(coef_[i][j]);
                peak = std::max(peak, m);
                if (i >= nx - nx / 8 - 1 || j >= ny - ny / 8 - 1) tail = std::max(tail, m);
            }
        return peak == 0.0 ? 0.0 : tail / peak;
    }

private:
    double ax_ = -1.0, bx_ = 1.0, ay_ = -1.0, by_ = 1.0;
    int ny_ = 0;
    std::vector<std::vector<Cplx>> coef_;
};

} // namespace qwhit

#endif
