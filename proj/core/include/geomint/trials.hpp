#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "geomint/raster.hpp"

namespace geomint {

/// The seven concept categories, in canonical report order.
enum class Category {
    symmetrical_figures,
    chiral_figures,
    euclidean_geometry,
    geometrical_figures,
    geometrical_transformations,
    metric_properties,
    topology,
};

inline constexpr std::array<Category, 7> all_categories{
    Category::symmetrical_figures,    Category::chiral_figures,
    Category::euclidean_geometry,     Category::geometrical_figures,
    Category::geometrical_transformations, Category::metric_properties,
    Category::topology,
};

std::string_view to_string(Category c);
Category category_from_string(std::string_view name); // throws std::invalid_argument

/// One six-image odd-one-out problem: five images embody the concept, the
/// image at odd_index violates it. Image entries are file references.
struct Problem {
    int concept_id = 0;
    std::string concept_name;
    Category category = Category::topology;
    std::array<std::string, 6> images;
    int odd_index = 0;

    friend bool operator==(const Problem&, const Problem&) = default;
};

/// One 2-AFC trial: a target plus two choices, with the conforming choice
/// at correct_index and the problem's odd image as the other choice.
struct Trial {
    int concept_id = 0;
    Category category = Category::topology;
    std::string target;
    std::array<std::string, 2> choices;
    int correct_index = 0;

    friend bool operator==(const Trial&, const Trial&) = default;
};

/// All 20 trials of a problem: the target ranges over the five conforming
/// images and the conforming choice over the remaining four (ordered
/// pairs). The correct choice's side alternates with trial parity, so each
/// side carries the answer 10 times. Throws std::invalid_argument on a
/// malformed problem.
std::vector<Trial> generate_trials(const Problem& problem);

/// Knobs for the synthetic stimulus generators. Each generator randomizes
/// only the attributes irrelevant to its concept (position always; rotation
/// and size where the concept allows).
struct GeneratorParams {
    int canvas_size = 128;
    double stroke_width = 2.2;
    double position_jitter = 9.0; // max |offset| from canvas center, px
    double scale_jitter = 0.08;   // max relative size deviation
};

struct SynthesizedProblem {
    Problem problem;                 // image entries are canonical file names
    std::array<GrayImage, 6> images; // rendered stimuli, same order
};

/// Ids of the shipped generators, one per category.
std::vector<std::string_view> generator_ids();

/// Renders a six-image problem for the given concept generator.
/// Deterministic for a fixed (id, params, seed). Throws
/// std::invalid_argument for unknown ids or degenerate params.
SynthesizedProblem synthesize_problem(std::string_view generator_id,
                                      const GeneratorParams& params, std::uint64_t seed);

/// Independent geometric check that a rendered stimulus embodies the
/// generator's concept. Works on the mask alone, without the solver's
/// feature pipeline.
bool image_conforms(std::string_view generator_id, const BinaryImage& image);

/// Writes the six images plus problem.json into `dir` (created if absent)
/// and returns the manifest path. Manifest image paths are relative to it.
std::filesystem::path write_problem(const SynthesizedProblem& sp,
                                    const std::filesystem::path& dir);

void save_problem_manifest(const Problem& problem, const std::filesystem::path& path);
/// Loads a manifest; image paths come back resolved against its directory.
Problem load_problem_manifest(const std::filesystem::path& path);

/// Saves trials with image paths relativized against the manifest directory.
void save_trials_manifest(const std::vector<Trial>& trials, const std::filesystem::path& path);
/// Loads trials; image paths come back resolved against the manifest directory.
std::vector<Trial> load_trials_manifest(const std::filesystem::path& path);

} // namespace geomint
