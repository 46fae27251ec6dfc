#ifndef QWHIT_CONTOUR_HPP
#define QWHIT_CONTOUR_HPP

#include <vector>

#include "qwhit/complex_util.hpp"
#include "qwhit/errors.hpp"

namespace qwhit {

// A piecewise-linear integration path running from Re = -inf to Re = +inf.
// Finite breakpoints sit between two infinite rays.  Rays are horizontal by
// default; an optional slope s makes a ray escape along direction (1, s) so
// that integrands whose tails oscillate on horizontal lines can be damped.
class ContourPath {
public:
    // Horizontal line R + i*offset.
    static ContourPath horizontal(double offset);

    // Path through the given breakpoints (ordered by increasing Re), with
    // rays attached at the first/last vertex.
    explicit ContourPath(std::vector<Cplx> vertices, double left_slope = 0.0,
                         double right_slope = 0.0);

    const std::vector<Cplx>& vertices() const { return vertices_; }
    double left_offset() const { return vertices_.front().imag(); }
    double right_offset() const { return vertices_.back().imag(); }
    double left_slope() const { return left_slope_; }
    double right_slope() const { return right_slope_; }

    // Direction of travel along each ray, oriented away from the breakpoints.
    Cplx left_ray_dir() const { return {-1.0, -left_slope_}; }
    Cplx right_ray_dir() const { return {1.0, right_slope_}; }

    // Rigid vertical shift of the whole path.
    ContourPath shifted(double dy) const;

private:
    std::vector<Cplx> vertices_;
    double left_slope_ = 0.0;
    double right_slope_ = 0.0;
};

// Builds a path that stays below every upward pole ray anchored at `below`
// and above every downward pole ray anchored at `above`, with margin at
// least `margin`.  Returns a horizontal line at `default_offset` whenever
// that line already separates the anchors; otherwise inserts rectangular
// detours around the offending anchors.  Throws NoSeparatingPath when two
// anchors with nearly equal real parts demand incompatible levels.
ContourPath separating_contour(const std::vector<Cplx>& below,
                               const std::vector<Cplx>& above,
                               double default_offset, double margin);

} // namespace qwhit

#endif
