#include "geomint/align.hpp"

#include <cmath>
#include <numbers>

namespace geomint {

PointSet center_points(const PointSet& ps, Point& centroid) {
    double sx = 0.0;
    double sy = 0.0;
    for (const Point& p : ps) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(ps.size());
    centroid = {sx / n, sy / n};
    PointSet out;
    out.reserve(ps.size());
    for (const Point& p : ps)
        out.push_back({(n * p.x - sx) / n, (n * p.y - sy) / n});
    return out;
}

double principal_angle(const PointSet& ps) {
    if (ps.size() < 2)
        throw DegenerateFigureError("principal axis needs at least 2 points");

    Point centroid;
    const PointSet centered = center_points(ps, centroid);

    double cxx = 0.0, cxy = 0.0, cyy = 0.0;
    for (const Point& p : centered) {
        cxx += p.x * p.x;
        cxy += p.x * p.y;
        cyy += p.y * p.y;
    }
    const double n = static_cast<double>(ps.size());
    cxx /= n;
    cxy /= n;
    cyy /= n;

    // Eigenvalue gap of the 2x2 covariance: lambda1 - lambda2.
    const double gap = std::hypot(cxx - cyy, 2.0 * cxy);
    const double lambda1 = 0.5 * (cxx + cyy + gap);
    if (gap / std::max(lambda1, 1e-12) < eigen_gap_tolerance)
        return 0.0;

    double angle = 0.5 * std::atan2(2.0 * cxy, cxx - cyy);
    if (angle <= -std::numbers::pi / 2)
        angle += std::numbers::pi;
    return angle;
}

AlignedFigure align_figure(const PointSet& ps, double angle, bool flipped) {
    if (ps.size() < 2)
        throw DegenerateFigureError("alignment needs at least 2 points");

    AlignedFigure fig;
    fig.angle = angle;
    fig.flipped = flipped;
    fig.points = center_points(ps, fig.centroid);

    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (Point& p : fig.points) {
        // Rotation by -angle; flipping negates both coordinates, which keeps
        // the two orientations exact 180-degree images of each other.
        const double x = c * p.x + s * p.y;
        const double y = c * p.y - s * p.x;
        p = flipped ? Point{-x, -y} : Point{x, y};
    }
    return fig;
}

std::pair<AlignedFigure, AlignedFigure> candidate_orientations(const PointSet& ps) {
    const double angle = principal_angle(ps);
    return {align_figure(ps, angle, false), align_figure(ps, angle, true)};
}

} // namespace geomint
