#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "geomint/align.hpp"
#include "geomint/features.hpp"
#include "support/helpers.hpp"

using namespace geomint;
using testing::points_of;

namespace {

constexpr double pi = std::numbers::pi;

// Asymmetric L used in several cases below.
PointSet l_shape() {
    return points_of({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});
}

std::pair<double, double> aligned_covariance(const PointSet& ps, double& cross) {
    double cxx = 0, cxy = 0, cyy = 0;
    for (const Point& p : ps) {
        cxx += p.x * p.x;
        cxy += p.x * p.y;
        cyy += p.y * p.y;
    }
    const double n = static_cast<double>(ps.size());
    cross = cxy / n;
    return {cxx / n, cyy / n};
}

} // namespace

TEST_CASE("principal_angle on canonical figures") {
    CHECK(principal_angle(points_of({{0, 0}, {1, 0}, {2, 0}})) == 0.0);
    CHECK(principal_angle(points_of({{0, 0}, {1, 1}, {2, 2}})) == doctest::Approx(pi / 4));
    CHECK(principal_angle(points_of({{0, 0}, {0, 1}, {0, 2}})) == doctest::Approx(pi / 2));
    // equal eigenvalues: the degeneracy rule pins the angle to 0
    CHECK(principal_angle(points_of({{0, 0}, {0, 1}, {1, 0}, {1, 1}})) == 0.0);
}

TEST_CASE("principal_angle requires two points") {
    CHECK_THROWS_AS(principal_angle(points_of({{1, 1}})), DegenerateFigureError);
    CHECK_THROWS_AS(align_figure(points_of({{1, 1}}), 0.0, false), DegenerateFigureError);
    CHECK_THROWS_AS(candidate_orientations(PointSet{}), DegenerateFigureError);
}

TEST_CASE("align: centering only") {
    const AlignedFigure fig = align_figure(points_of({{0, 0}, {2, 0}}), 0.0, false);
    REQUIRE(fig.points.size() == 2);
    CHECK(fig.points[0].x == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fig.points[0].y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fig.points[1].x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fig.centroid == Point{1.0, 0.0});
}

TEST_CASE("align: diagonal pair rotates onto the x-axis") {
    // Rotation by -pi/4 maps centered (1,1) to (sqrt(2), 0).
    const AlignedFigure fig = align_figure(points_of({{0, 0}, {2, 2}}), pi / 4, false);
    const double root2 = std::sqrt(2.0);
    CHECK(fig.points[0].x == doctest::Approx(-root2).epsilon(1e-9));
    CHECK(fig.points[0].y == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(fig.points[1].x == doctest::Approx(root2).epsilon(1e-9));
    CHECK(fig.points[1].y == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("flipped orientation is the exact 180-degree image") {
    const PointSet ps = l_shape();
    const double angle = principal_angle(ps);
    const AlignedFigure plain = align_figure(ps, angle, false);
    const AlignedFigure flipped = align_figure(ps, angle, true);
    REQUIRE(plain.points.size() == flipped.points.size());
    for (std::size_t i = 0; i < plain.points.size(); ++i) {
        CHECK(flipped.points[i].x == -plain.points[i].x);
        CHECK(flipped.points[i].y == -plain.points[i].y);
    }
    CHECK(flipped.flipped);
    CHECK_FALSE(plain.flipped);
}

TEST_CASE("candidate orientations") {
    SUBCASE("horizontal line: mirror pair") {
        const auto [a, b] = candidate_orientations(points_of({{0, 0}, {1, 0}, {2, 0}}));
        CHECK(testing::same_point_set(a.points, b.points, 1e-9));
    }
    SUBCASE("point-symmetric figure: orientations coincide as sets") {
        const auto [a, b] =
            candidate_orientations(points_of({{0, 0}, {2, 1}, {4, 2}, {-2, -1}, {-4, -2}}));
        CHECK(testing::same_point_set(a.points, b.points, 1e-9));
    }
    SUBCASE("asymmetric L: center-shift profiles differ between orientations") {
        // the equal-armed L aligns with its mirror axis vertical, so the
        // asymmetry shows up in the horizontal slices
        const auto [a, b] = candidate_orientations(l_shape());
        const double diff = base_difference(extract_features(a.points),
                                            extract_features(b.points),
                                            BaseFeature::center_shift);
        CHECK(diff > 0.1);
        const Profile ph_a = center_shift_profile(a.points, Axis::horizontal);
        const Profile ph_b = center_shift_profile(b.points, Axis::horizontal);
        CHECK(profile_difference(ph_a, ph_b) > 0.1);
    }
}

TEST_CASE("aligned figures are centered with the long axis horizontal") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coord(-20.0, 20.0);
    for (int round = 0; round < 40; ++round) {
        PointSet ps;
        for (int i = 0; i < 24; ++i)
            ps.push_back({coord(rng), 0.35 * coord(rng)});
        const AlignedFigure fig = align_figure(ps, principal_angle(ps), false);

        double sx = 0, sy = 0;
        for (const Point& p : fig.points) {
            sx += p.x;
            sy += p.y;
        }
        CHECK(std::abs(sx / fig.points.size()) < 1e-9);
        CHECK(std::abs(sy / fig.points.size()) < 1e-9);

        double cross = 0;
        const auto [cxx, cyy] = aligned_covariance(fig.points, cross);
        const double lambda1 = std::max(cxx, cyy);
        CHECK(cxx >= cyy - 1e-6 * lambda1);
        CHECK(std::abs(cross) <= 1e-6 * lambda1);
    }
}

TEST_CASE("integer translation leaves the aligned point set bit-identical") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 25; ++round) {
        BinaryImage mask{16, 16, std::vector<std::uint8_t>(256, 0)};
        std::uniform_int_distribution<int> cell(3, 9);
        for (int k = 0; k < 12; ++k)
            mask.foreground[static_cast<std::size_t>(cell(rng)) * 16 + cell(rng)] = 1;
        if (mask.foreground_count() < 3)
            continue;

        BinaryImage moved{16, 16, std::vector<std::uint8_t>(256, 0)};
        for (int y = 0; y < 16; ++y)
            for (int x = 0; x < 16; ++x)
                if (mask.is_foreground(x, y))
                    moved.foreground[static_cast<std::size_t>(y + 5) * 16 + (x + 4)] = 1;

        const PointSet a = extract_points(mask);
        const PointSet b = extract_points(moved);
        const AlignedFigure fa = align_figure(a, principal_angle(a), false);
        const AlignedFigure fb = align_figure(b, principal_angle(b), false);
        REQUIRE(fa.points.size() == fb.points.size());
        for (std::size_t i = 0; i < fa.points.size(); ++i) {
            CHECK(fa.points[i].x == fb.points[i].x);
            CHECK(fa.points[i].y == fb.points[i].y);
        }
    }
}

TEST_CASE("rotating the input reproduces one of the candidate orientations") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> coord(-15.0, 15.0);
    std::uniform_real_distribution<double> phi(0.0, 2 * pi);
    for (int round = 0; round < 30; ++round) {
        PointSet ps;
        for (int i = 0; i < 20; ++i)
            ps.push_back({coord(rng), 0.4 * coord(rng)});
        const auto [plain, flipped] = candidate_orientations(ps);

        const PointSet rotated = testing::rotate_points(ps, phi(rng));
        const AlignedFigure re = align_figure(rotated, principal_angle(rotated), false);

        const bool matches_plain = testing::same_point_set(re.points, plain.points, 1e-6);
        const bool matches_flipped = testing::same_point_set(re.points, flipped.points, 1e-6);
        CHECK((matches_plain || matches_flipped));
    }
}

TEST_CASE("align is rigid: pairwise distances survive within 1e-9") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coord(-30.0, 30.0);
    PointSet ps;
    for (int i = 0; i < 16; ++i)
        ps.push_back({coord(rng), coord(rng)});
    const AlignedFigure fig = align_figure(ps, principal_angle(ps), false);
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            const double before = std::hypot(ps[i].x - ps[j].x, ps[i].y - ps[j].y);
            const double after = std::hypot(fig.points[i].x - fig.points[j].x,
                                            fig.points[i].y - fig.points[j].y);
            CHECK(std::abs(before - after) < 1e-9);
        }
}

TEST_CASE("align preserves chirality: signed triple areas keep their sign") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> coord(-25.0, 25.0);
    const auto signed_area = [](const Point& a, const Point& b, const Point& c) {
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    };
    for (int round = 0; round < 20; ++round) {
        PointSet ps;
        for (int i = 0; i < 9; ++i)
            ps.push_back({coord(rng), 0.5 * coord(rng)});
        for (const bool flip : {false, true}) {
            const AlignedFigure fig = align_figure(ps, principal_angle(ps), flip);
            for (std::size_t i = 0; i + 2 < ps.size(); ++i) {
                const double before = signed_area(ps[i], ps[i + 1], ps[i + 2]);
                const double after =
                    signed_area(fig.points[i], fig.points[i + 1], fig.points[i + 2]);
                if (std::abs(before) > 1e-6)
                    CHECK(before * after > 0.0);
            }
        }
    }
}
