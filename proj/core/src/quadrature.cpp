#include "qwhit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>

namespace qwhit {

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss rule on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct EvalBudget {
    long long used = 0;
    long long limit = 0;
    void spend(long long n)
    {
        used += n;
        if (used > limit) throw BudgetExceeded("quadrature evaluation budget exceeded");
    }
};

struct Panel {
    Cplx a, b; // straight segment in the complex plane
    Cplx val;
    double err;
    double mag; // L1 magnitude, sets the machine-noise floor of err
    bool refinable;
};

Panel gk15(const Integrand1& f, Cplx a, Cplx b, EvalBudget& budget,
           double noise = 3e-15)
{
    budget.spend(15);
    const Cplx c = 0.5 * (a + b);
    const Cplx h = 0.5 * (b - a);
    const Cplx fc = f(c);
    Cplx kron = kWgk[7] * fc;
    Cplx gauss = kWg[3] * fc;
    double l1 = kWgk[7] * std::abs(fc);
    // The embedded Gauss nodes are the odd-index Kronrod nodes.
    for (int j = 0; j < 7; ++j) {
        const Cplx fp = f(c + kXgk[j] * h);
        const Cplx fm = f(c - kXgk[j] * h);
        kron += kWgk[j] * (fp + fm);
        l1 += kWgk[j] * (std::abs(fp) + std::abs(fm));
        if (j % 2 == 1) gauss += kWg[j / 2] * (fp + fm);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.val = kron * h;
    p.err = std::abs((kron - gauss) * h);
    p.mag = l1 * std::abs(h);
    if (!is_finite(p.val))
        throw QuadratureFailure("integrand returned a non-finite value");
    p.refinable = std::abs(b - a) > 1e-13 * (1.0 + std::abs(a) + std::abs(b)) &&
                  p.err > 0.5 * noise * p.mag;
    return p;
}

struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

// Shared panel pool with priority refinement.
class PanelSet {
public:
    explicit PanelSet(const Integrand1& f, EvalBudget& budget, double integrand_noise = 0.0)
        : f_(f), budget_(budget), noise_(std::max(integrand_noise, 3e-15))
    {
    }

    void add_segment(Cplx a, Cplx b)
    {
        push(gk15(f_, a, b, budget_, noise_));
    }

    Cplx value() const { return total_; }
    double error() const { return err_; }

    // Aggregate rounding floor: no refinement can push the total error
    // estimate below the noise level times the L1 mass of the integrand.
    double noise_floor() const { return noise_ * mag_; }

    // Split worst panels until the total error estimate drops below eps
    // (clamped at the noise floor).  Returns false if refinement stalls.
    bool refine(double eps)
    {
        double last_check = err_;
        int since_check = 0;
        while (err_ > std::max(eps, noise_floor())) {
            if (heap_.empty()) return false;
            Panel worst = heap_.top();
            if (!worst.refinable || worst.err <= 0.0) return false;
            heap_.pop();
            total_ -= worst.val;
            err_ -= worst.err;
            mag_ -= worst.mag;
            const Cplx mid = 0.5 * (worst.a + worst.b);
            push(gk15(f_, worst.a, mid, budget_, noise_));
            push(gk15(f_, mid, worst.b, budget_, noise_));
            // Round-off dominated regime: stop once splitting stops helping.
            if (++since_check >= 50) {
                if (err_ > 0.98 * last_check) return false;
                last_check = err_;
                since_check = 0;
            }
        }
        return true;
    }

private:
    void push(Panel p)
    {
        total_ += p.val;
        err_ += p.err;
        mag_ += p.mag;
        if (p.refinable) heap_.push(p);
    }

    const Integrand1& f_;
    EvalBudget& budget_;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap_;
    Cplx total_{};
    double err_ = 0.0;
    double mag_ = 0.0;
    double noise_ = 3e-15;
};

// Integrates f along one infinite ray z(t) = anchor + t*dir, t >= 0, oriented
// outward.  Blocks grow geometrically; stops once two consecutive blocks are
// negligible against eps_tail().  The caller folds `tail_bound` into the
// error estimate.
class RayIntegrator {
public:
    // `flip` marks the left ray: points run outward along dir while the
    // contour is traversed inward, so each block enters with reversed
    // orientation.
    RayIntegrator(const Integrand1& f, Cplx anchor, Cplx dir, bool flip,
                  EvalBudget& budget, double first_block, int max_blocks)
        : f_(f), anchor_(anchor), dir_(dir), flip_(flip), budget_(budget),
          block_(first_block), max_blocks_(max_blocks)
    {
    }

    // Extends until converged; integrates each block into `panels`.  The
    // target is re-evaluated per block through eps(), which tracks both the
    // running value of the whole contour and the peak contribution seen.
    void extend(PanelSet& panels, const std::function<double()>& eps_fn, double* peak)
    {
        int small_in_a_row = 0;
        while (small_in_a_row < 2) {
            const double eps = eps_fn();
            if (blocks_done_ >= max_blocks_) {
                char msg[200];
                std::snprintf(msg, sizeof msg,
                              "ray tail failed to converge after %d blocks "
                              "(anchor=(%.3g,%.3g) dir=(%.3g,%.3g) last=%.3g eps=%.3g)",
                              blocks_done_, anchor_.real(), anchor_.imag(), dir_.real(),
                              dir_.imag(), last_mag_, eps);
                throw NonDecayingTail(msg);
            }
            Cplx a = anchor_ + t_ * dir_;
            Cplx b = anchor_ + (t_ + block_) * dir_;
            if (flip_) std::swap(a, b);
            Panel p = gk15(f_, a, b, budget_);
            // one bisection pass for a sane local estimate of long blocks
            if (p.err > 0.25 * eps && p.refinable) {
                const Cplx mid = 0.5 * (a + b);
                Panel p1 = gk15(f_, a, mid, budget_);
                Panel p2 = gk15(f_, mid, b, budget_);
                panels.add_segment(a, mid);
                panels.add_segment(mid, b);
                last_mag_ = std::abs(p1.val) + p1.err + std::abs(p2.val) + p2.err;
            } else {
                panels.add_segment(a, b);
                last_mag_ = std::abs(p.val) + p.err;
            }
            *peak = std::max(*peak, last_mag_);
            history_.push_back(last_mag_);
            ++blocks_done_;
            t_ += block_;
            block_ *= 1.6;
            if (last_mag_ <= eps)
                ++small_in_a_row;
            else
                small_in_a_row = 0;
            // Early rejection: sustained non-decreasing contributions well
            // above the target signal a wrong contour regime.  Plateaus of
            // in-chamber oscillations can run long, so wait a few blocks.
            const size_t n = history_.size();
            if (n >= 8 && last_mag_ > 1e3 * eps && history_[n - 1] >= history_[n - 2] &&
                history_[n - 2] >= history_[n - 3] && history_[n - 3] >= history_[n - 4]) {
                char msg[256];
                std::snprintf(msg, sizeof msg,
                              "ray tail contributions are not decreasing "
                              "(anchor=(%.3g,%.3g) dir=(%.3g,%.3g) t=%.3g mags=%.3g,%.3g,%.3g eps=%.3g)",
                              anchor_.real(), anchor_.imag(), dir_.real(), dir_.imag(), t_,
                              history_[n - 3], history_[n - 2], history_[n - 1], eps);
                throw NonDecayingTail(msg);
            }
        }
        tail_bound_ = last_mag_;
    }

    double tail_bound() const { return tail_bound_; }

private:
    const Integrand1& f_;
    Cplx anchor_, dir_;
    bool flip_;
    EvalBudget& budget_;
    double block_;
    int max_blocks_;
    double t_ = 0.0;
    int blocks_done_ = 0;
    double last_mag_ = 0.0;
    double tail_bound_ = 0.0;
    std::vector<double> history_;
};

QuadratureResult integrate_impl(const Integrand1& f, const ContourPath& path,
                                const IntegrateOptions& opts, EvalBudget& budget)
{
    PanelSet panels(f, budget, opts.integrand_noise);

    // Finite segments between breakpoints.
    const auto& v = path.vertices();
    for (size_t i = 1; i < v.size(); ++i) panels.add_segment(v[i - 1], v[i]);

    RayIntegrator left(f, v.front(), path.left_ray_dir(), /*flip=*/true, budget,
                       opts.first_block, opts.max_blocks);
    RayIntegrator right(f, v.back(), path.right_ray_dir(), /*flip=*/false, budget,
                        opts.first_block, opts.max_blocks);

    // Tail target: relative to the integral when it is sizeable, relative to
    // the peak contribution when cancellations make the total small.
    double peak = std::abs(panels.value());
    auto eps_tail = [&]() {
        const double scale = std::max(std::abs(panels.value()), 1e-3 * peak);
        return 0.25 * std::max(opts.abs_floor, opts.tol * std::max(scale, 1e-300));
    };

    left.extend(panels, eps_tail, &peak);
    right.extend(panels, eps_tail, &peak);

    // Refine until the estimate meets the target; rays may need another
    // extension round when the refined value shrinks the target.
    for (int round = 0; round < 4; ++round) {
        const double target = 4.0 * eps_tail();
        bool ok = panels.refine(0.5 * target);
        const double tails = left.tail_bound() + right.tail_bound();
        if (ok && tails <= 0.5 * target) break;
        if (tails > 0.5 * target) {
            left.extend(panels, eps_tail, &peak);
            right.extend(panels, eps_tail, &peak);
        } else if (!ok) {
            break; // refinement stalled; honesty check below decides
        }
    }

    QuadratureResult r;
    r.value = panels.value();
    r.abs_error = panels.error() + left.tail_bound() + right.tail_bound();
    r.evaluations = budget.used;

    const double allowance =
        std::max(16.0 * eps_tail() / 0.25, 8.0 * panels.noise_floor());
    if (r.abs_error > allowance) {
        char msg[256];
        std::snprintf(msg, sizeof msg,
                      "quadrature error estimate did not meet the tolerance "
                      "(err=%.3g allow=%.3g |value|=%.3g tails=%.3g noise=%.3g evals=%lld)",
                      r.abs_error, allowance, std::abs(r.value),
                      left.tail_bound() + right.tail_bound(), panels.noise_floor(),
                      r.evaluations);
        throw QuadratureFailure(msg);
    }
    return r;
}

} // namespace

QuadratureResult integrate(const Integrand1& f, const ContourPath& path,
                           const IntegrateOptions& opts)
{
    EvalBudget budget{0, opts.budget};
    return integrate_impl(f, path, opts, budget);
}

QuadratureResult integrate_segment(const Integrand1& f, Cplx a, Cplx b,
                                   double tol, double abs_floor, long long budget_limit)
{
    EvalBudget budget{0, budget_limit};
    PanelSet panels(f, budget);
    panels.add_segment(a, b);
    for (int round = 0; round < 4; ++round) {
        const double target =
            std::max(abs_floor, tol * std::max(std::abs(panels.value()), 1e-300));
        if (panels.refine(target)) break;
    }
    QuadratureResult r;
    r.value = panels.value();
    r.abs_error = panels.error();
    r.evaluations = budget.used;
    const double target =
        std::max(abs_floor, tol * std::max(std::abs(r.value), 1e-300));
    if (r.abs_error > std::max(16.0 * target, 8.0 * panels.noise_floor()))
        throw QuadratureFailure("segment quadrature did not meet the tolerance");
    return r;
}

QuadratureResult integrate_nested(const IntegrandN& f,
                                  const std::vector<ContourPath>& paths,
                                  const NestedOptions& opts)
{
    const size_t dim = paths.size();
    if (dim < 1 || dim > 3)
        throw Error("integrate_nested supports dimensions 1..3");

    EvalBudget budget{0, opts.budget};
    std::vector<Cplx> coords(dim);

    // Axis i uses tolerance tol * tighten^i (inner axes are tighter).
    std::vector<double> tol(dim);
    for (size_t i = 0; i < dim; ++i)
        tol[i] = opts.tol * std::pow(opts.tighten, static_cast<double>(i));

    // Largest inner-integral magnitude seen per axis: inner evaluations in
    // the outer tails only need absolute accuracy relative to this scale.
    std::vector<double> peak(dim, 0.0);

    std::function<Cplx(size_t)> level = [&](size_t axis) -> Cplx {
        IntegrateOptions o;
        o.tol = tol[axis];
        o.budget = opts.budget; // shared budget enforced via `budget`
        o.first_block = opts.first_block;
        o.max_blocks = opts.max_blocks;
        o.abs_floor = 0.45 * tol[axis] * peak[axis];
        o.integrand_noise = axis + 1 == dim ? opts.integrand_noise
                                            : std::max(opts.integrand_noise, 2.0 * tol[axis + 1]);
        Integrand1 g = [&, axis](Cplx z) -> Cplx {
            coords[axis] = z;
            if (axis + 1 == dim) return f(std::span<const Cplx>(coords));
            return level(axis + 1);
        };
        const Cplx v = integrate_impl(g, paths[axis], o, budget).value;
        peak[axis] = std::max(peak[axis], std::abs(v));
        return v;
    };

    IntegrateOptions outer;
    outer.tol = tol[0];
    outer.budget = opts.budget;
    outer.first_block = opts.first_block;
    outer.max_blocks = opts.max_blocks;
    outer.integrand_noise =
        dim == 1 ? opts.integrand_noise : std::max(opts.integrand_noise, 2.0 * tol[1]);
    Integrand1 g0 = [&](Cplx z) -> Cplx {
        coords[0] = z;
        if (dim == 1) return f(std::span<const Cplx>(coords));
        return level(1);
    };
    QuadratureResult r = integrate_impl(g0, paths[0], outer, budget);

    // Fold the inner-axis tolerances into the reported estimate.
    double inner_rel = 0.0;
    for (size_t i = 1; i < dim; ++i) inner_rel += tol[i];
    r.abs_error += 2.0 * inner_rel * std::abs(r.value);
    r.evaluations = budget.used;
    return r;
}

} // namespace qwhit
