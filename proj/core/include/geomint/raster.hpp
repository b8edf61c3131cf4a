#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "geomint/errors.hpp"

namespace geomint {

/// 8-bit grayscale raster, row-major. 0 is black ink, 255 is white background.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> intensities; // width * height values

    std::uint8_t at(int x, int y) const {
        return intensities[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return intensities[static_cast<std::size_t>(y) * width + x];
    }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Figure/background mask with the same dimensions as its source image.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> foreground; // 1 = figure pixel

    bool is_foreground(int x, int y) const {
        return foreground[static_cast<std::size_t>(y) * width + x] != 0;
    }
    int foreground_count() const;

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Figure-pixel coordinates: x = column, y = row, y grows downward.
/// Integer-valued right after extraction, real-valued after rotation.
using PointSet = std::vector<Point>;

/// Decodes a PNM image (PGM P2/P5, PPM P3/P6, maxval up to 255).
/// Color samples are collapsed to luminance with Rec. 601 weights.
GrayImage decode_pnm(std::istream& in);

/// Reads an image file. Only the PNM family is supported.
GrayImage load_image(const std::filesystem::path& path);

/// Writes a binary PGM (P5, maxval 255), one byte per pixel, row-major.
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

inline constexpr std::uint8_t default_threshold = 128;

/// A cell is foreground iff its intensity is strictly below the threshold
/// (figures are dark ink on a light background).
BinaryImage binarize(const GrayImage& img, std::uint8_t threshold);

/// One point per foreground cell, at integer (column, row) coordinates.
/// Throws EmptyFigureError on an all-background mask and
/// DegenerateFigureError when fewer than 2 points remain.
PointSet extract_points(const BinaryImage& bin);

} // namespace geomint
