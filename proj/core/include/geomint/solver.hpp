#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "geomint/align.hpp"
#include "geomint/features.hpp"

namespace geomint {

struct ModelConfig {
    FeatureSelection selection;            // scoring features; must be nonempty
    std::uint8_t threshold = default_threshold;
    std::string preset_name;               // optional label, echoed in reports

    friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

ModelConfig preset_config(std::string_view preset);

/// Outcome of one trial. chosen_index minimizes the per-choice differences;
/// ties (equal within tie_relative_tolerance) resolve to index 0.
struct Decision {
    int chosen_index = 0;
    std::array<double, 2> differences{};
    std::array<bool, 2> orientation_flags{};
    bool tie = false;

    friend bool operator==(const Decision&, const Decision&) = default;
};

inline constexpr double tie_relative_tolerance = 1e-9;

/// Resolves the 180-degree ambiguity of a choice figure: picks whichever
/// candidate orientation has the smaller sum of all three base-feature
/// differences against the target. Exact ties keep the unflipped one.
AlignedFigure orient_choice(const FeatureProfiles& target_features,
                            const PointSet& choice_points);
AlignedFigure orient_choice(const AlignedFigure& target, const PointSet& choice_points);

/// Sum of the selected feature differences, all with weight 1: base entries
/// contribute base_difference, self entries profile_difference on the
/// self-symmetry profiles.
double overall_difference(const FeatureProfiles& target, const FeatureProfiles& choice,
                          const FeatureSelection& selection);

/// Full comparison on already-extracted point sets: aligns the target
/// unflipped, orients both choices against it, and picks the choice with
/// the smaller overall difference.
Decision solve_points(const PointSet& target, const PointSet& choice_a,
                      const PointSet& choice_b, const FeatureSelection& selection);

/// Image-level pipeline: binarize, extract, then solve_points. Errors name
/// the failing image ("target", "choice_a", "choice_b").
Decision solve_trial(const GrayImage& target, const GrayImage& choice_a,
                     const GrayImage& choice_b, const ModelConfig& config);

} // namespace geomint
