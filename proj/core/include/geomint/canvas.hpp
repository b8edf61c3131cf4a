#pragma once

#include <span>
#include <vector>

#include "geomint/raster.hpp"

namespace geomint {

/// Binary drawing surface for synthetic stimuli. All strokes are
/// hard-edged (membership tests on pixel centers, no anti-aliasing), so
/// rendering is deterministic bit for bit.
class Canvas {
public:
    explicit Canvas(int size) : Canvas(size, size) {}
    Canvas(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }

    void set(int x, int y);
    bool get(int x, int y) const;

    void fill_disk(Point center, double radius);
    void stroke_segment(Point a, Point b, double width);
    void stroke_polyline(std::span<const Point> vertices, double width, bool closed = false);
    void stroke_circle(Point center, double radius, double width);
    /// Arc from angle `start` sweeping counterclockwise by `sweep` radians.
    void stroke_arc(Point center, double radius, double start, double sweep, double width);

    /// Unions the canvas with its reflection about the vertical line
    /// x = axis_x. Exact when 2*axis_x is integral.
    void mirror_about_column(double axis_x);
    /// Unions the canvas with its 180-degree rotation about `center`.
    /// Exact when 2*center.x and 2*center.y are integral.
    void rotate180_about(Point center);

    GrayImage to_gray() const;    // ink = 0, background = 255
    BinaryImage to_binary() const;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> ink_;
};

} // namespace geomint
