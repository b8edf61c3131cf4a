#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <set>

#include "geomint/trials.hpp"
#include "support/helpers.hpp"

using namespace geomint;

namespace {

Problem sample_problem(int odd_index = 2) {
    Problem p;
    p.concept_id = 5;
    p.concept_name = "Closure";
    p.category = Category::topology;
    for (int i = 0; i < 6; ++i)
        p.images[static_cast<std::size_t>(i)] = "img_" + std::to_string(i) + ".pgm";
    p.odd_index = odd_index;
    return p;
}

} // namespace

TEST_CASE("generate_trials: 20 trials covering all ordered conforming pairs") {
    const Problem p = sample_problem();
    const auto trials = generate_trials(p);
    REQUIRE(trials.size() == 20);

    const std::string& odd = p.images[static_cast<std::size_t>(p.odd_index)];
    std::set<std::pair<std::string, std::string>> pairs;
    std::map<std::string, int> target_counts;
    int correct_left = 0;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const Trial& t = trials[i];
        CHECK(t.concept_id == p.concept_id);
        CHECK(t.category == p.category);
        CHECK(t.target != odd);

        // exactly one choice is the odd image, the other conforms
        const std::string& conforming =
            t.choices[static_cast<std::size_t>(t.correct_index)];
        const std::string& rejected =
            t.choices[static_cast<std::size_t>(1 - t.correct_index)];
        CHECK(rejected == odd);
        CHECK(conforming != odd);
        CHECK(conforming != t.target);

        // the correct side alternates deterministically
        CHECK(t.correct_index == static_cast<int>(i % 2));
        correct_left += t.correct_index == 0 ? 1 : 0;

        pairs.insert({t.target, conforming});
        target_counts[t.target] += 1;
    }
    CHECK(pairs.size() == 20); // all 5 x 4 ordered pairs, no repeats
    CHECK(correct_left == 10);
    CHECK(target_counts.size() == 5);
    for (const auto& [target, count] : target_counts)
        CHECK(count == 4);
}

TEST_CASE("generate_trials is pure") {
    const Problem p = sample_problem(4);
    CHECK(generate_trials(p) == generate_trials(p));
}

TEST_CASE("generate_trials rejects malformed problems") {
    Problem bad = sample_problem();
    bad.odd_index = 6;
    CHECK_THROWS_AS(generate_trials(bad), std::invalid_argument);
    bad = sample_problem();
    bad.images[3].clear();
    CHECK_THROWS_AS(generate_trials(bad), std::invalid_argument);
}

TEST_CASE("synthesize_problem is deterministic per seed") {
    for (const auto id : generator_ids()) {
        const SynthesizedProblem a = synthesize_problem(id, GeneratorParams{}, 99);
        const SynthesizedProblem b = synthesize_problem(id, GeneratorParams{}, 99);
        CHECK(a.problem == b.problem);
        for (int i = 0; i < 6; ++i)
            CHECK(a.images[static_cast<std::size_t>(i)] ==
                  b.images[static_cast<std::size_t>(i)]);
        const SynthesizedProblem c = synthesize_problem(id, GeneratorParams{}, 100);
        CHECK(a.images != c.images);
    }
}

TEST_CASE("synthesize_problem rejects unknown generators and bad params") {
    CHECK_THROWS_AS(synthesize_problem("warp_field", GeneratorParams{}, 1),
                    std::invalid_argument);
    GeneratorParams tiny;
    tiny.canvas_size = 16;
    CHECK_THROWS_AS(synthesize_problem("closure", tiny, 1), std::invalid_argument);
    GeneratorParams flat;
    flat.stroke_width = 0.0;
    CHECK_THROWS_AS(synthesize_problem("closure", flat, 1), std::invalid_argument);
}

TEST_CASE("every synthesized stimulus passes its own concept validator") {
    for (const auto id : generator_ids()) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
            const SynthesizedProblem sp = synthesize_problem(id, GeneratorParams{}, seed);
            for (int i = 0; i < 6; ++i) {
                const BinaryImage bin =
                    binarize(sp.images[static_cast<std::size_t>(i)], default_threshold);
                const bool conforms = image_conforms(id, bin);
                if (i == sp.problem.odd_index)
                    CHECK_FALSE(conforms);
                else
                    CHECK(conforms);
            }
        }
    }
}

TEST_CASE("generator roster covers all seven categories") {
    const auto ids = generator_ids();
    REQUIRE(ids.size() == 7);
    std::set<Category> covered;
    for (const auto id : ids)
        covered.insert(synthesize_problem(id, GeneratorParams{}, 1).problem.category);
    CHECK(covered.size() == 7);
}

TEST_CASE("center_of_circle: dot sits on or off the recovered circle center") {
    // recompute dot-to-center distances straight from the rendered masks
    const SynthesizedProblem sp = synthesize_problem("center_of_circle", GeneratorParams{}, 7);
    const auto dot_offset = [](const BinaryImage& bin) {
        PointSet ink;
        for (int y = 0; y < bin.height; ++y)
            for (int x = 0; x < bin.width; ++x)
                if (bin.is_foreground(x, y))
                    ink.push_back({double(x), double(y)});
        double cx = 0, cy = 0;
        for (const Point& p : ink) {
            cx += p.x / ink.size();
            cy += p.y / ink.size();
        }
        double rmax = 0;
        for (const Point& p : ink)
            rmax = std::max(rmax, std::hypot(p.x - cx, p.y - cy));
        PointSet ring, dot;
        for (const Point& p : ink)
            (std::hypot(p.x - cx, p.y - cy) >= 0.85 * rmax ? ring : dot).push_back(p);
        REQUIRE(!ring.empty());
        REQUIRE(!dot.empty());
        double rx = 0, ry = 0, dx = 0, dy = 0;
        for (const Point& p : ring) {
            rx += p.x / ring.size();
            ry += p.y / ring.size();
        }
        for (const Point& p : dot) {
            dx += p.x / dot.size();
            dy += p.y / dot.size();
        }
        return std::hypot(dx - rx, dy - ry);
    };
    for (int i = 0; i < 6; ++i) {
        const double offset =
            dot_offset(binarize(sp.images[static_cast<std::size_t>(i)], default_threshold));
        if (i == sp.problem.odd_index)
            CHECK(offset > 6.0);
        else
            CHECK(offset < 2.5);
    }
}

TEST_CASE("chirality_z: handedness recovered from the rendered strokes") {
    const SynthesizedProblem sp = synthesize_problem("chirality_z", GeneratorParams{}, 1);
    for (int i = 0; i < 6; ++i) {
        const bool conforms = image_conforms(
            "chirality_z", binarize(sp.images[static_cast<std::size_t>(i)], default_threshold));
        CHECK(conforms == (i != sp.problem.odd_index));
    }
}

TEST_CASE("problem manifests round-trip with path resolution") {
    const testing::TempDir dir("manifest");
    const SynthesizedProblem sp = synthesize_problem("closure", GeneratorParams{}, 11);
    const auto manifest = write_problem(sp, dir.path());
    CHECK(manifest.filename() == "problem.json");

    const Problem loaded = load_problem_manifest(manifest);
    CHECK(loaded.concept_id == sp.problem.concept_id);
    CHECK(loaded.concept_name == sp.problem.concept_name);
    CHECK(loaded.category == sp.problem.category);
    CHECK(loaded.odd_index == sp.problem.odd_index);
    for (int i = 0; i < 6; ++i) {
        const auto& path = loaded.images[static_cast<std::size_t>(i)];
        CHECK(std::filesystem::path(path).is_absolute());
        CHECK(load_image(path) == sp.images[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("trial manifests round-trip with relative paths") {
    const testing::TempDir dir("trials");
    const SynthesizedProblem sp = synthesize_problem("straight_line", GeneratorParams{}, 13);
    const auto manifest = write_problem(sp, dir.path());
    const Problem problem = load_problem_manifest(manifest);

    const auto trials = generate_trials(problem);
    const auto trials_path = dir.path() / "trials.json";
    save_trials_manifest(trials, trials_path);

    const auto loaded = load_trials_manifest(trials_path);
    CHECK(loaded == trials); // loader resolves back to the same absolute paths

    // saved file must not embed the temp dir
    std::ifstream in(trials_path);
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    CHECK(text.find(dir.path().generic_string()) == std::string::npos);
}

TEST_CASE("load_trials_manifest validates shape") {
    const testing::TempDir dir("badtrials");
    const auto path = dir.path() / "t.json";
    {
        std::ofstream out(path);
        out << "{\"not\": \"an array\"}";
    }
    CHECK_THROWS_AS(load_trials_manifest(path), std::invalid_argument);
    CHECK_THROWS_AS(load_trials_manifest(dir.path() / "missing.json"), ImageIoError);
}
