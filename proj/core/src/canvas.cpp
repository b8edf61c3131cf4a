#include "geomint/canvas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geomint {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    a = std::fmod(a, two_pi);
    return a < 0.0 ? a + two_pi : a;
}

} // namespace

Canvas::Canvas(int width, int height)
    : width_(width), height_(height),
      ink_(static_cast<std::size_t>(width) * height, 0) {}

void Canvas::set(int x, int y) {
    if (x >= 0 && x < width_ && y >= 0 && y < height_)
        ink_[static_cast<std::size_t>(y) * width_ + x] = 1;
}

bool Canvas::get(int x, int y) const {
    if (x < 0 || x >= width_ || y < 0 || y >= height_)
        return false;
    return ink_[static_cast<std::size_t>(y) * width_ + x] != 0;
}

void Canvas::fill_disk(Point center, double radius) {
    const int x0 = std::max(0, static_cast<int>(std::floor(center.x - radius)) - 1);
    const int x1 = std::min(width_ - 1, static_cast<int>(std::ceil(center.x + radius)) + 1);
    const int y0 = std::max(0, static_cast<int>(std::floor(center.y - radius)) - 1);
    const int y1 = std::min(height_ - 1, static_cast<int>(std::ceil(center.y + radius)) + 1);
    const double r2 = radius * radius;
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
            const double dx = x - center.x;
            const double dy = y - center.y;
            if (dx * dx + dy * dy <= r2)
                set(x, y);
        }
}

void Canvas::stroke_segment(Point a, Point b, double width) {
    const double r = width / 2.0;
    const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - r)) - 1);
    const int x1 = std::min(width_ - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + r)) + 1);
    const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - r)) - 1);
    const int y1 = std::min(height_ - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + r)) + 1);

    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    const double r2 = r * r;
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
            const double px = x - a.x;
            const double py = y - a.y;
            double t = len2 > 0.0 ? (px * vx + py * vy) / len2 : 0.0;
            t = std::clamp(t, 0.0, 1.0);
            const double dx = px - t * vx;
            const double dy = py - t * vy;
            if (dx * dx + dy * dy <= r2)
                set(x, y);
        }
}

void Canvas::stroke_polyline(std::span<const Point> vertices, double width, bool closed) {
    if (vertices.size() < 2)
        return;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        stroke_segment(vertices[i], vertices[i + 1], width);
    if (closed)
        stroke_segment(vertices.back(), vertices.front(), width);
}

void Canvas::stroke_circle(Point center, double radius, double width) {
    stroke_arc(center, radius, 0.0, two_pi, width);
}

void Canvas::stroke_arc(Point center, double radius, double start, double sweep, double width) {
    const double r_out = radius + width / 2.0;
    const int x0 = std::max(0, static_cast<int>(std::floor(center.x - r_out)) - 1);
    const int x1 = std::min(width_ - 1, static_cast<int>(std::ceil(center.x + r_out)) + 1);
    const int y0 = std::max(0, static_cast<int>(std::floor(center.y - r_out)) - 1);
    const int y1 = std::min(height_ - 1, static_cast<int>(std::ceil(center.y + r_out)) + 1);

    const bool full = sweep >= two_pi;
    const double a0 = wrap_angle(start);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
            const double dx = x - center.x;
            const double dy = y - center.y;
            const double dist = std::sqrt(dx * dx + dy * dy);
            if (std::abs(dist - radius) > width / 2.0)
                continue;
            if (!full) {
                const double rel = wrap_angle(std::atan2(dy, dx) - a0);
                if (rel > sweep)
                    continue;
            }
            set(x, y);
        }
}

void Canvas::mirror_about_column(double axis_x) {
    const std::vector<std::uint8_t> before = ink_;
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x) {
            if (!before[static_cast<std::size_t>(y) * width_ + x])
                continue;
            const int mx = static_cast<int>(std::lround(2.0 * axis_x)) - x;
            set(mx, y);
        }
}

void Canvas::rotate180_about(Point center) {
    const std::vector<std::uint8_t> before = ink_;
    const int cx2 = static_cast<int>(std::lround(2.0 * center.x));
    const int cy2 = static_cast<int>(std::lround(2.0 * center.y));
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x) {
            if (!before[static_cast<std::size_t>(y) * width_ + x])
                continue;
            set(cx2 - x, cy2 - y);
        }
}

GrayImage Canvas::to_gray() const {
    GrayImage img{width_, height_, {}};
    img.intensities.reserve(ink_.size());
    for (const std::uint8_t v : ink_)
        img.intensities.push_back(v ? 0 : 255);
    return img;
}

BinaryImage Canvas::to_binary() const {
    return BinaryImage{width_, height_, ink_};
}

} // namespace geomint
