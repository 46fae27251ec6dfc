#include "qwhit/contour.hpp"

#include <algorithm>
#include <cmath>

namespace qwhit {

ContourPath ContourPath::horizontal(double offset)
{
    return ContourPath({Cplx(0.0, offset)});
}

ContourPath::ContourPath(std::vector<Cplx> vertices, double left_slope, double right_slope)
    : vertices_(std::move(vertices)), left_slope_(left_slope), right_slope_(right_slope)
{
    if (vertices_.empty())
        throw Error("ContourPath needs at least one breakpoint");
    for (size_t i = 1; i < vertices_.size(); ++i) {
        if (std::abs(vertices_[i] - vertices_[i - 1]) == 0.0)
            throw Error("ContourPath: consecutive vertices must be distinct");
    }
}

ContourPath ContourPath::shifted(double dy) const
{
    std::vector<Cplx> v = vertices_;
    for (auto& z : v) z += Cplx(0.0, dy);
    return ContourPath(std::move(v), left_slope_, right_slope_);
}

ContourPath separating_contour(const std::vector<Cplx>& below,
                               const std::vector<Cplx>& above,
                               double default_offset, double margin)
{
    if (margin <= 0.0) margin = 1e-9;

    double hi = std::numeric_limits<double>::infinity();  // must stay below this
    double lo = -std::numeric_limits<double>::infinity(); // must stay above this
    for (Cplx a : below) hi = std::min(hi, a.imag() - margin);
    for (Cplx a : above) lo = std::max(lo, a.imag() + margin);

    if (lo <= hi) {
        double y = std::clamp(default_offset, lo, hi);
        return ContourPath::horizontal(y);
    }

    // No single level works: a horizontal line at the default with local
    // rectangular detours around the offending anchors.  Anchors whose real
    // parts nearly coincide but demand incompatible levels are hopeless.
    const double y0 = default_offset;
    struct Offender {
        double re;
        double level; // level the path must reach near re
    };
    std::vector<Offender> offenders;
    for (Cplx a : below)
        if (a.imag() - margin < y0) offenders.push_back({a.real(), a.imag() - margin});
    for (Cplx a : above)
        if (a.imag() + margin > y0) offenders.push_back({a.real(), a.imag() + margin});

    const double w_conflict = 4.0 * margin;
    for (Cplx b : below)
        for (Cplx a : above)
            if (std::abs(b.real() - a.real()) < w_conflict && b.imag() - a.imag() < 2.0 * margin)
                throw NoSeparatingPath("anchors at nearly equal real parts demand "
                                       "incompatible contour levels");

    std::sort(offenders.begin(), offenders.end(),
              [](const Offender& p, const Offender& q) { return p.re < q.re; });

    // Detour half-width: narrow enough not to collide with neighbours.
    double w = 0.25;
    for (size_t i = 1; i < offenders.size(); ++i)
        w = std::min(w, 0.45 * (offenders[i].re - offenders[i - 1].re));
    w = std::max(w, 8.0 * margin);

    std::vector<Cplx> verts;
    verts.emplace_back(offenders.front().re - 2.0 * w, y0);
    for (const auto& o : offenders) {
        verts.emplace_back(o.re - w, y0);
        verts.emplace_back(o.re - w, o.level);
        verts.emplace_back(o.re + w, o.level);
        verts.emplace_back(o.re + w, y0);
    }
    verts.emplace_back(offenders.back().re + 2.0 * w, y0);

    // Drop duplicated corner points produced by touching windows.
    std::vector<Cplx> clean;
    for (Cplx z : verts)
        if (clean.empty() || std::abs(z - clean.back()) > 1e-14) clean.push_back(z);
    return ContourPath(std::move(clean));
}

} // namespace qwhit
