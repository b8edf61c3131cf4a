#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "geomint/raster.hpp"

namespace testing {

/// Scratch directory removed on scope exit.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("geomint_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline geomint::PointSet points_of(std::initializer_list<std::pair<double, double>> coords) {
    geomint::PointSet ps;
    for (const auto& [x, y] : coords)
        ps.push_back({x, y});
    return ps;
}

/// Shifts image content by (dx, dy); uncovered pixels become background.
/// Content must stay in bounds.
inline geomint::GrayImage translate_image(const geomint::GrayImage& img, int dx, int dy) {
    geomint::GrayImage out{img.width, img.height,
                           std::vector<std::uint8_t>(img.intensities.size(), 255)};
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            if (img.at(x, y) == 255)
                continue;
            const int nx = x + dx;
            const int ny = y + dy;
            if (nx >= 0 && nx < img.width && ny >= 0 && ny < img.height)
                out.at(nx, ny) = img.at(x, y);
        }
    return out;
}

inline geomint::PointSet rotate_points(const geomint::PointSet& ps, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    geomint::PointSet out;
    out.reserve(ps.size());
    for (const geomint::Point& p : ps)
        out.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
    return out;
}

/// Greedy matching: every point of `a` has exactly one partner in `b`
/// within `tol` (Euclidean). Quadratic, for small sets.
inline bool same_point_set(const geomint::PointSet& a, const geomint::PointSet& b, double tol) {
    if (a.size() != b.size())
        return false;
    std::vector<bool> used(b.size(), false);
    for (const geomint::Point& p : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j])
                continue;
            if (std::hypot(p.x - b[j].x, p.y - b[j].y) <= tol) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

/// Random figure masks for property tests.
inline geomint::BinaryImage random_mask(std::mt19937_64& rng, int width, int height,
                                        double density) {
    geomint::BinaryImage bin{width, height, {}};
    bin.foreground.reserve(static_cast<std::size_t>(width) * height);
    std::bernoulli_distribution ink(density);
    for (int i = 0; i < width * height; ++i)
        bin.foreground.push_back(ink(rng) ? 1 : 0);
    return bin;
}

inline geomint::GrayImage render_mask(const geomint::BinaryImage& bin) {
    geomint::GrayImage img{bin.width, bin.height, {}};
    img.intensities.reserve(bin.foreground.size());
    for (const std::uint8_t v : bin.foreground)
        img.intensities.push_back(v ? 0 : 255);
    return img;
}

} // namespace testing
