#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <stdexcept>

#include "geomint/align.hpp"
#include "geomint/canvas.hpp"
#include "geomint/trials.hpp"

namespace geomint {

namespace {

constexpr double pi = std::numbers::pi;

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    // Raw 53-bit mapping; avoids distribution objects so streams are stable.
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * unit(); }
    double signed_jitter(double amplitude) { return uniform(-amplitude, amplitude); }
    int uniform_int(int a, int b) {
        return a + static_cast<int>(eng() % static_cast<std::uint64_t>(b - a + 1));
    }
};

Point rotated(Point p, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

std::vector<Point> place(std::span<const Point> local, double scale, double angle, Point at) {
    std::vector<Point> out;
    out.reserve(local.size());
    for (const Point& p : local) {
        const Point r = rotated({p.x * scale, p.y * scale}, angle);
        out.push_back({at.x + r.x, at.y + r.y});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Instance attribute helpers
// ---------------------------------------------------------------------------

Point jittered_center(Rng& rng, const GeneratorParams& params) {
    const double half = params.canvas_size / 2.0;
    return {half + rng.signed_jitter(params.position_jitter),
            half + rng.signed_jitter(params.position_jitter)};
}

// Integer-pixel center for figures built with exact mask symmetrization.
Point integer_center(Rng& rng, const GeneratorParams& params) {
    const int half = params.canvas_size / 2;
    const int jitter = static_cast<int>(std::floor(params.position_jitter));
    return {static_cast<double>(half + rng.uniform_int(-jitter, jitter)),
            static_cast<double>(half + rng.uniform_int(-jitter, jitter))};
}

double jittered_scale(Rng& rng, const GeneratorParams& params) {
    return 1.0 + rng.signed_jitter(params.scale_jitter);
}

// ---------------------------------------------------------------------------
// Mask-level measurements used by the concept validators
// ---------------------------------------------------------------------------

PointSet ink_points(const BinaryImage& img) {
    PointSet points;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.is_foreground(x, y))
                points.push_back({static_cast<double>(x), static_cast<double>(y)});
    return points;
}

Point centroid_of(const PointSet& points) {
    double sx = 0.0, sy = 0.0;
    for (const Point& p : points) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(points.size());
    return {sx / n, sy / n};
}

// Covariance eigenvalues, larger first.
std::pair<double, double> covariance_eigenvalues(const PointSet& points) {
    const Point c = centroid_of(points);
    double cxx = 0.0, cxy = 0.0, cyy = 0.0;
    for (const Point& p : points) {
        const double dx = p.x - c.x;
        const double dy = p.y - c.y;
        cxx += dx * dx;
        cxy += dx * dy;
        cyy += dy * dy;
    }
    const double n = static_cast<double>(points.size());
    cxx /= n;
    cxy /= n;
    cyy /= n;
    const double gap = std::hypot(cxx - cyy, 2.0 * cxy);
    return {0.5 * (cxx + cyy + gap), 0.5 * (cxx + cyy - gap)};
}

// sqrt(lambda2 / lambda1): ~0 for a straight stroke, larger for bent ones.
double thinness_ratio(const PointSet& points) {
    const auto [l1, l2] = covariance_eigenvalues(points);
    return std::sqrt(std::max(l2, 0.0) / std::max(l1, 1e-12));
}

// Fraction of ink preserved by mirroring about the centroid column.
double mirror_overlap(const BinaryImage& img) {
    const PointSet points = ink_points(img);
    if (points.empty())
        return 0.0;
    const double cx2 = 2.0 * centroid_of(points).x;
    int kept = 0;
    for (const Point& p : points) {
        const int mx = static_cast<int>(std::lround(cx2 - p.x));
        const int y = static_cast<int>(p.y);
        if (mx >= 0 && mx < img.width && img.is_foreground(mx, y))
            ++kept;
    }
    return static_cast<double>(kept) / static_cast<double>(points.size());
}

// Fraction of ink preserved by a 180-degree turn about the centroid.
double rotation_overlap(const BinaryImage& img) {
    const PointSet points = ink_points(img);
    if (points.empty())
        return 0.0;
    const Point c = centroid_of(points);
    const double cx2 = 2.0 * c.x;
    const double cy2 = 2.0 * c.y;
    int kept = 0;
    for (const Point& p : points) {
        const int mx = static_cast<int>(std::lround(cx2 - p.x));
        const int my = static_cast<int>(std::lround(cy2 - p.y));
        if (mx >= 0 && mx < img.width && my >= 0 && my < img.height &&
            img.is_foreground(mx, my))
            ++kept;
    }
    return static_cast<double>(kept) / static_cast<double>(points.size());
}

// Background pixels unreachable from the image border (4-connected).
int enclosed_background(const BinaryImage& img) {
    const int w = img.width;
    const int h = img.height;
    std::vector<std::uint8_t> reached(static_cast<std::size_t>(w) * h, 0);
    std::deque<std::pair<int, int>> queue;
    const auto push = [&](int x, int y) {
        if (x < 0 || x >= w || y < 0 || y >= h)
            return;
        const std::size_t i = static_cast<std::size_t>(y) * w + x;
        if (reached[i] || img.is_foreground(x, y))
            return;
        reached[i] = 1;
        queue.emplace_back(x, y);
    };
    for (int x = 0; x < w; ++x) {
        push(x, 0);
        push(x, h - 1);
    }
    for (int y = 0; y < h; ++y) {
        push(0, y);
        push(w - 1, y);
    }
    while (!queue.empty()) {
        const auto [x, y] = queue.front();
        queue.pop_front();
        push(x - 1, y);
        push(x + 1, y);
        push(x, y - 1);
        push(x, y + 1);
    }
    int enclosed = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (!img.is_foreground(x, y) && !reached[static_cast<std::size_t>(y) * w + x])
                ++enclosed;
    return enclosed;
}

// Convex hull (monotone chain), counterclockwise in y-down coordinates.
std::vector<Point> convex_hull(PointSet points) {
    std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3)
        return points;
    const auto cross = [](const Point& o, const Point& a, const Point& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<Point> hull(2 * points.size());
    std::size_t k = 0;
    for (const Point& p : points) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0)
            --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

double polygon_area(const std::vector<Point>& poly) {
    double s = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return std::abs(s) / 2.0;
}

// Hull area over minimum-area bounding box area: ~1 for rectangles,
// ~sin(interior angle) for slanted parallelograms.
double rectangularity(const PointSet& points) {
    const std::vector<Point> hull = convex_hull(points);
    if (hull.size() < 3)
        return 0.0;
    const double hull_area = polygon_area(hull);
    double best = std::numeric_limits<double>::max();
    for (double deg = 0.0; deg < 90.0; deg += 0.5) {
        const double a = deg * pi / 180.0;
        const double c = std::cos(a);
        const double s = std::sin(a);
        double min_u = 1e300, max_u = -1e300, min_v = 1e300, max_v = -1e300;
        for (const Point& p : hull) {
            const double u = c * p.x + s * p.y;
            const double v = -s * p.x + c * p.y;
            min_u = std::min(min_u, u);
            max_u = std::max(max_u, u);
            min_v = std::min(min_v, v);
            max_v = std::max(max_v, v);
        }
        best = std::min(best, (max_u - min_u) * (max_v - min_v));
    }
    return best > 0.0 ? hull_area / best : 0.0;
}

// Handedness statistic: normalized third mixed moment of the PCA-aligned
// points. Invariant under the 180-degree orientation ambiguity, flips sign
// under mirroring.
double chirality_measure(const PointSet& points) {
    const AlignedFigure fig = align_figure(points, principal_angle(points), false);
    double sxx = 0.0, syy = 0.0, m31 = 0.0;
    for (const Point& p : fig.points) {
        sxx += p.x * p.x;
        syy += p.y * p.y;
        m31 += p.x * p.x * p.x * p.y;
    }
    const double n = static_cast<double>(points.size());
    const double sx = std::sqrt(sxx / n);
    const double sy = std::sqrt(syy / n);
    return (m31 / n) / (sx * sx * sx * sy + 1e-12);
}

// ---------------------------------------------------------------------------
// Generators: one per category. Each renders a single stimulus; `odd`
// switches to the concept-violating variant.
// ---------------------------------------------------------------------------

constexpr std::array<Point, 4> z_vertices{{{-18, -20}, {18, -20}, {-18, 20}, {18, 20}}};

// Chiral figures: a Z stroke at a random rotation; the odd image is the
// mirrored (S) form, which no proper rotation can reach. Size is kept
// fixed so handedness is the only systematic difference.
void render_chirality_z(Canvas& canvas, Rng& rng, const GeneratorParams& params, bool odd) {
    std::array<Point, 4> v = z_vertices;
    if (odd)
        for (Point& p : v)
            p.x = -p.x;
    const double angle = rng.uniform(0.0, 2.0 * pi);
    const auto placed = place(v, 1.0, angle, jittered_center(rng, params));
    canvas.stroke_polyline(placed, std::max(params.stroke_width, 2.5));
}

bool validate_chirality_z(const BinaryImage& img) {
    static const double reference = [] {
        Canvas canvas(128);
        canvas.stroke_polyline(place(z_vertices, 1.0, 0.0, {64.0, 64.0}), 2.5);
        return chirality_measure(extract_points(canvas.to_binary()));
    }();
    const PointSet points = ink_points(img);
    if (points.size() < 2)
        return false;
    const double m = chirality_measure(points);
    return std::abs(m) > 0.01 && (m > 0.0) == (reference > 0.0);
}

// Metric properties: a circle with a dot at (conforming) or away from
// (violating) its center. Radius varies between instances, so the scale
// noise the concept is meant to survive is built in.
void render_center_of_circle(Canvas& canvas, Rng& rng, const GeneratorParams& params,
                             bool odd) {
    const Point c = jittered_center(rng, params);
    const double radius = rng.uniform(22.0, 34.0);
    canvas.stroke_circle(c, radius, params.stroke_width);
    Point dot = c;
    if (odd) {
        const double dist = radius * rng.uniform(0.45, 0.62);
        const double dir = rng.uniform(0.0, 2.0 * pi);
        dot = {c.x + dist * std::cos(dir), c.y + dist * std::sin(dir)};
    }
    canvas.fill_disk(dot, 3.2);
}

bool validate_center_of_circle(const BinaryImage& img) {
    const PointSet points = ink_points(img);
    if (points.empty())
        return false;
    const Point c0 = centroid_of(points);
    double rmax = 0.0;
    for (const Point& p : points)
        rmax = std::max(rmax, std::hypot(p.x - c0.x, p.y - c0.y));

    PointSet ring;
    for (const Point& p : points)
        if (std::hypot(p.x - c0.x, p.y - c0.y) >= 0.85 * rmax)
            ring.push_back(p);
    if (ring.empty())
        return false;
    const Point ring_center = centroid_of(ring);

    PointSet dot;
    for (const Point& p : points)
        if (std::hypot(p.x - ring_center.x, p.y - ring_center.y) < 0.80 * rmax)
            dot.push_back(p);
    if (dot.empty())
        return false;
    const Point dot_center = centroid_of(dot);
    return std::hypot(dot_center.x - ring_center.x, dot_center.y - ring_center.y) <= 3.5;
}

// Euclidean geometry: straight segments; the odd image bends into a
// circular arc with the same chord.
void render_straight_line(Canvas& canvas, Rng& rng, const GeneratorParams& params, bool odd) {
    const Point c = jittered_center(rng, params);
    const double length = 58.0 * jittered_scale(rng, params);
    const double dir = rng.uniform(0.0, pi);
    const Point d{std::cos(dir), std::sin(dir)};
    if (!odd) {
        canvas.stroke_segment({c.x - 0.5 * length * d.x, c.y - 0.5 * length * d.y},
                              {c.x + 0.5 * length * d.x, c.y + 0.5 * length * d.y},
                              params.stroke_width);
        return;
    }
    const double half_angle = 0.55;
    const double radius = length / (2.0 * std::sin(half_angle));
    const Point n{-d.y, d.x};
    const Point o{c.x + radius * std::cos(half_angle) * n.x,
                  c.y + radius * std::cos(half_angle) * n.y};
    std::vector<Point> arc;
    const int samples = 48;
    for (int i = 0; i <= samples; ++i) {
        const double t = -half_angle + 2.0 * half_angle * i / samples;
        arc.push_back({o.x + radius * (std::sin(t) * d.x - std::cos(t) * n.x),
                       o.y + radius * (std::sin(t) * d.y - std::cos(t) * n.y)});
    }
    canvas.stroke_polyline(arc, params.stroke_width);
}

bool validate_straight_line(const BinaryImage& img) {
    const PointSet points = ink_points(img);
    if (points.size() < 2)
        return false;
    return thinness_ratio(points) < 0.10;
}

// Geometrical figures: rectangle outlines at random rotations; the odd
// image is a parallelogram with the same side lengths but a slanted angle.
void render_rectangle(Canvas& canvas, Rng& rng, const GeneratorParams& params, bool odd) {
    const double s = jittered_scale(rng, params);
    const double a = 46.0 * s;
    const double b = 29.0 * s;
    const double slant = odd ? 58.0 * pi / 180.0 : pi / 2.0;
    const Point side{b * std::cos(slant), b * std::sin(slant)};
    const std::array<Point, 4> corners{{{0.0, 0.0},
                                        {a, 0.0},
                                        {a + side.x, side.y},
                                        {side.x, side.y}}};
    Point mean{0.0, 0.0};
    for (const Point& p : corners) {
        mean.x += p.x / 4.0;
        mean.y += p.y / 4.0;
    }
    std::array<Point, 4> local{};
    for (std::size_t i = 0; i < 4; ++i)
        local[i] = {corners[i].x - mean.x, corners[i].y - mean.y};
    const auto placed =
        place(local, 1.0, rng.uniform(0.0, pi), jittered_center(rng, params));
    canvas.stroke_polyline(placed, params.stroke_width, /*closed=*/true);
}

bool validate_rectangle(const BinaryImage& img) {
    const PointSet points = ink_points(img);
    if (points.size() < 3)
        return false;
    return rectangularity(points) >= 0.93;
}

// Symmetrical figures: an arrow outline mirrored about a vertical axis on
// the pixel grid; the odd image gets a displaced left arm instead.
void render_vertical_axis(Canvas& canvas, Rng& rng, const GeneratorParams& params, bool odd) {
    const Point c = integer_center(rng, params);
    const double s = jittered_scale(rng, params);
    const auto placed_half = [&](std::span<const Point> half) {
        return place(half, s, 0.0, c);
    };
    constexpr std::array<Point, 5> right_half{
        {{0, -26}, {13, -2}, {5, -2}, {5, 20}, {0, 20}}};
    canvas.stroke_polyline(placed_half(right_half), params.stroke_width);
    if (!odd) {
        canvas.mirror_about_column(c.x);
        return;
    }
    constexpr std::array<Point, 5> skewed_left{
        {{0, -26}, {-13, 6}, {-5, 6}, {-5, 20}, {0, 20}}};
    canvas.stroke_polyline(placed_half(skewed_left), params.stroke_width);
}

bool validate_vertical_axis(const BinaryImage& img) {
    return mirror_overlap(img) >= 0.90;
}

// Topology: closed ellipse outlines; the odd image leaves a wide gap.
void render_closure(Canvas& canvas, Rng& rng, const GeneratorParams& params, bool odd) {
    const Point c = jittered_center(rng, params);
    const double s = jittered_scale(rng, params);
    const double a = 27.0 * s;
    const double b = 18.0 * s;
    const double tilt = rng.uniform(0.0, pi);
    const double gap = odd ? 1.25 : 0.0;
    std::vector<Point> outline;
    const int samples = 96;
    for (int i = 0; i <= samples; ++i) {
        const double t = gap / 2.0 + (2.0 * pi - gap) * i / samples;
        const Point local{a * std::cos(t), b * std::sin(t)};
        const Point r = rotated(local, tilt);
        outline.push_back({c.x + r.x, c.y + r.y});
    }
    canvas.stroke_polyline(outline, params.stroke_width, /*closed=*/!odd);
}

bool validate_closure(const BinaryImage& img) {
    return enclosed_background(img) >= 120;
}

// Geometrical transformations: a two-arm pinwheel that maps onto itself
// under a half turn; the odd image pairs the arm with its mirror image,
// which breaks the point symmetry.
void render_point_symmetry(Canvas& canvas, Rng& rng, const GeneratorParams& params,
                           bool odd) {
    const Point c = integer_center(rng, params);
    const double s = jittered_scale(rng, params);
    const double angle = rng.uniform(0.0, 2.0 * pi);
    constexpr std::array<Point, 3> arm{{{3, 0}, {22, 5}, {27, 16}}};
    canvas.stroke_polyline(place(arm, s, angle, c), params.stroke_width);
    canvas.fill_disk(c, 3.0 * s);
    if (!odd) {
        canvas.rotate180_about(c);
        return;
    }
    constexpr std::array<Point, 3> mirrored_arm{{{-3, 0}, {-22, 5}, {-27, 16}}};
    canvas.stroke_polyline(place(mirrored_arm, s, angle, c), params.stroke_width);
}

bool validate_point_symmetry(const BinaryImage& img) {
    return rotation_overlap(img) >= 0.90;
}

// ---------------------------------------------------------------------------

struct Generator {
    std::string_view id;
    int concept_id;
    std::string_view concept_name;
    Category category;
    void (*render)(Canvas&, Rng&, const GeneratorParams&, bool odd);
    bool (*validate)(const BinaryImage&);
};

constexpr std::array<Generator, 7> generators{{
    {"vertical_axis", 28, "Vertical axis", Category::symmetrical_figures,
     render_vertical_axis, validate_vertical_axis},
    {"chirality_z", 44, "Oblique axis", Category::chiral_figures, render_chirality_z,
     validate_chirality_z},
    {"straight_line", 10, "Straight line", Category::euclidean_geometry,
     render_straight_line, validate_straight_line},
    {"rectangle", 24, "Rectangle", Category::geometrical_figures, render_rectangle,
     validate_rectangle},
    {"point_symmetry", 32, "Point symmetry", Category::geometrical_transformations,
     render_point_symmetry, validate_point_symmetry},
    {"center_of_circle", 18, "Center of circle", Category::metric_properties,
     render_center_of_circle, validate_center_of_circle},
    {"closure", 5, "Closure", Category::topology, render_closure, validate_closure},
}};

const Generator& find_generator(std::string_view id) {
    for (const Generator& g : generators)
        if (g.id == id)
            return g;
    throw std::invalid_argument("unknown concept generator: " + std::string(id));
}

void check_params(const GeneratorParams& params) {
    if (params.canvas_size < 64)
        throw std::invalid_argument("canvas_size must be at least 64");
    if (params.stroke_width <= 0.0)
        throw std::invalid_argument("stroke_width must be positive");
    if (params.position_jitter < 0.0 || params.scale_jitter < 0.0)
        throw std::invalid_argument("jitter amplitudes must be nonnegative");
    if (params.scale_jitter >= 0.5)
        throw std::invalid_argument("scale_jitter must stay below 0.5");
}

} // namespace

std::vector<std::string_view> generator_ids() {
    std::vector<std::string_view> ids;
    ids.reserve(generators.size());
    for (const Generator& g : generators)
        ids.push_back(g.id);
    return ids;
}

SynthesizedProblem synthesize_problem(std::string_view generator_id,
                                      const GeneratorParams& params, std::uint64_t seed) {
    const Generator& gen = find_generator(generator_id);
    check_params(params);

    Rng rng(seed);
    SynthesizedProblem sp;
    sp.problem.concept_id = gen.concept_id;
    sp.problem.concept_name = std::string(gen.concept_name);
    sp.problem.category = gen.category;
    sp.problem.odd_index = rng.uniform_int(0, 5);
    for (int i = 0; i < 6; ++i) {
        Canvas canvas(params.canvas_size);
        gen.render(canvas, rng, params, i == sp.problem.odd_index);
        sp.images[static_cast<std::size_t>(i)] = canvas.to_gray();
        sp.problem.images[static_cast<std::size_t>(i)] =
            "img_" + std::to_string(i) + ".pgm";
    }
    return sp;
}

bool image_conforms(std::string_view generator_id, const BinaryImage& image) {
    return find_generator(generator_id).validate(image);
}

} // namespace geomint
