#pragma once

#include <utility>

#include "geomint/raster.hpp"

namespace geomint {

/// A figure centered on its centroid and rotated so that the first principal
/// axis of its point set lies along the x-axis. Only proper rotations are
/// applied, so handedness is preserved; the remaining ambiguity is the
/// 180-degree flip captured by `flipped`.
struct AlignedFigure {
    PointSet points;        // centered, rotated coordinates
    double angle = 0.0;     // principal-axis direction removed from the input, radians
    Point centroid;         // centroid of the original point set
    bool flipped = false;   // true = the 180-degree-rotated orientation
};

/// Relative eigenvalue-gap threshold below which a figure counts as isotropic
/// and alignment falls back to the identity rotation.
inline constexpr double eigen_gap_tolerance = 1e-6;

/// Subtracts the centroid. Evaluated as (n*x - sum)/n so that on integer
/// grids the numerator stays integral and integer translations of the input
/// cancel bitwise.
PointSet center_points(const PointSet& ps, Point& centroid);

/// Direction of the dominant eigenvector of the point covariance matrix
/// (population convention), mapped into (-pi/2, pi/2]. Returns 0 when the
/// eigenvalue gap is below eigen_gap_tolerance.
double principal_angle(const PointSet& ps);

/// Centers the point set and rotates it by -angle (plus pi when flipped).
AlignedFigure align_figure(const PointSet& ps, double angle, bool flipped);

/// Both 180-degree-apart alignments of the figure, unflipped first.
std::pair<AlignedFigure, AlignedFigure> candidate_orientations(const PointSet& ps);

} // namespace geomint
