#include <doctest.h>

#include <random>
#include <sstream>

#include "geomint/raster.hpp"
#include "support/helpers.hpp"

using namespace geomint;

namespace {

GrayImage decode(const std::string& data) {
    std::istringstream in(data);
    return decode_pnm(in);
}

} // namespace

TEST_CASE("decode P2: 4x4 all-white") {
    std::string pgm = "P2\n4 4\n255\n";
    for (int i = 0; i < 16; ++i)
        pgm += "255 ";
    const GrayImage img = decode(pgm);
    CHECK(img.width == 4);
    CHECK(img.height == 4);
    REQUIRE(img.intensities.size() == 16);
    for (const auto v : img.intensities)
        CHECK(v == 255);
}

TEST_CASE("decode P2: 1x1 black") {
    const GrayImage img = decode("P2\n1 1\n255\n0\n");
    CHECK(img.width == 1);
    CHECK(img.height == 1);
    CHECK(img.intensities == std::vector<std::uint8_t>{0});
}

TEST_CASE("decode P5: one byte per pixel, row-major") {
    std::string pgm = "P5\n3 2\n255\n";
    for (int i = 0; i < 6; ++i)
        pgm.push_back(static_cast<char>(10 * i));
    const GrayImage img = decode(pgm);
    CHECK(img.intensities == std::vector<std::uint8_t>{0, 10, 20, 30, 40, 50});
    CHECK(img.at(2, 1) == 50);
}

TEST_CASE("decode handles header comments") {
    const GrayImage img = decode("P2 # magic\n# a comment line\n2 1\n255\n7 9\n");
    CHECK(img.intensities == std::vector<std::uint8_t>{7, 9});
}

TEST_CASE("decode P6 color uses Rec. 601 luminance") {
    std::string ppm = "P6\n2 1\n255\n";
    const unsigned char px[6] = {255, 0, 0, 0, 255, 0};
    ppm.append(reinterpret_cast<const char*>(px), 6);
    const GrayImage img = decode(ppm);
    CHECK(img.intensities[0] == 76);  // round(0.299 * 255)
    CHECK(img.intensities[1] == 150); // round(0.587 * 255)
}

TEST_CASE("decode error paths") {
    CHECK_THROWS_AS(decode("P5\n4 4\n255\nabc"), ImageFormatError); // truncated
    CHECK_THROWS_AS(decode("P2\n0 4\n255\n"), ImageFormatError);    // zero dimension
    CHECK_THROWS_AS(decode("P2\n2 1\n65535\n0 0\n"), ImageFormatError);
    CHECK_THROWS_AS(decode("P7\n2 1\n255\n0 0\n"), ImageFormatError);
    CHECK_THROWS_AS(decode("P2\n2 1\n255\n300 0\n"), ImageFormatError);
    CHECK_THROWS_AS(decode(""), ImageFormatError);
}

TEST_CASE("decode rejects PNG data with a pointed message") {
    const std::string png = "\x89PNG\r\n\x1a\n...";
    CHECK_THROWS_WITH_AS(decode(png), doctest::Contains("PNG"), ImageFormatError);
}

TEST_CASE("load_image: missing file") {
    CHECK_THROWS_AS(load_image("/nonexistent/geomint.pgm"), ImageIoError);
}

TEST_CASE("write_pgm round-trips") {
    const testing::TempDir dir("pgm");
    GrayImage img{3, 2, {0, 50, 100, 150, 200, 255}};
    const auto path = dir.path() / "img.pgm";
    write_pgm(img, path);
    CHECK(load_image(path) == img);
}

TEST_CASE("binarize: strict-less threshold rule") {
    SUBCASE("all white stays background") {
        const GrayImage img{2, 2, {255, 255, 255, 255}};
        CHECK(binarize(img, 128).foreground_count() == 0);
    }
    SUBCASE("checkerboard") {
        const GrayImage img{2, 2, {0, 255, 255, 0}};
        const BinaryImage bin = binarize(img, 128);
        CHECK(bin.is_foreground(0, 0));
        CHECK(bin.is_foreground(1, 1));
        CHECK_FALSE(bin.is_foreground(1, 0));
        CHECK(bin.foreground_count() == 2);
    }
    SUBCASE("threshold itself is background") {
        const GrayImage img{4, 1, {0, 64, 128, 192}};
        const BinaryImage bin = binarize(img, 128);
        CHECK(bin.is_foreground(0, 0));
        CHECK(bin.is_foreground(1, 0));
        CHECK_FALSE(bin.is_foreground(2, 0));
        CHECK_FALSE(bin.is_foreground(3, 0));
    }
}

TEST_CASE("extract_points basics") {
    SUBCASE("diagonal pair") {
        const BinaryImage bin{2, 2, {1, 0, 0, 1}};
        const PointSet points = extract_points(bin);
        REQUIRE(points.size() == 2);
        CHECK(points[0] == Point{0.0, 0.0});
        CHECK(points[1] == Point{1.0, 1.0});
    }
    SUBCASE("empty mask") {
        const BinaryImage bin{2, 2, {0, 0, 0, 0}};
        CHECK_THROWS_AS(extract_points(bin), EmptyFigureError);
    }
    SUBCASE("single pixel is degenerate") {
        const BinaryImage bin{2, 2, {0, 1, 0, 0}};
        CHECK_THROWS_AS(extract_points(bin), DegenerateFigureError);
    }
    SUBCASE("full 2x2 mask") {
        const BinaryImage bin{2, 2, {1, 1, 1, 1}};
        CHECK(extract_points(bin).size() == 4);
    }
}

TEST_CASE("binarize is idempotent through a 0/255 rendering") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> thr(1, 255);
    for (int round = 0; round < 50; ++round) {
        const BinaryImage mask = testing::random_mask(rng, 9, 7, 0.4);
        const std::uint8_t threshold = static_cast<std::uint8_t>(thr(rng));
        CHECK(binarize(testing::render_mask(mask), threshold).foreground == mask.foreground);
    }
}

TEST_CASE("point count always equals foreground count") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        const BinaryImage mask = testing::random_mask(rng, 8, 8, 0.3);
        if (mask.foreground_count() < 2)
            continue;
        CHECK(extract_points(mask).size() ==
              static_cast<std::size_t>(mask.foreground_count()));
    }
}

TEST_CASE("integer mask translation translates every point exactly") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 30; ++round) {
        BinaryImage mask{12, 12, std::vector<std::uint8_t>(144, 0)};
        std::uniform_int_distribution<int> cell(2, 6);
        for (int k = 0; k < 10; ++k)
            mask.foreground[static_cast<std::size_t>(cell(rng)) * 12 + cell(rng)] = 1;
        if (mask.foreground_count() < 2)
            continue;
        const int dx = 3, dy = 4;
        BinaryImage moved{12, 12, std::vector<std::uint8_t>(144, 0)};
        for (int y = 0; y < 12; ++y)
            for (int x = 0; x < 12; ++x)
                if (mask.is_foreground(x, y))
                    moved.foreground[static_cast<std::size_t>(y + dy) * 12 + (x + dx)] = 1;

        const PointSet a = extract_points(mask);
        const PointSet b = extract_points(moved);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(b[i].x == a[i].x + dx);
            CHECK(b[i].y == a[i].y + dy);
        }
    }
}
