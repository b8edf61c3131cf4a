#include "geomint/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace geomint {

ModelConfig preset_config(std::string_view preset) {
    ModelConfig cfg;
    cfg.selection = preset_selection(preset);
    cfg.preset_name = std::string(preset);
    return cfg;
}

namespace {

double base_feature_sum(const FeatureProfiles& target, const FeatureProfiles& choice) {
    double sum = 0.0;
    for (const BaseFeature f : all_base_features)
        sum += base_difference(target, choice, f);
    return sum;
}

PointSet figure_points(const GrayImage& img, std::uint8_t threshold, const char* role) {
    try {
        return extract_points(binarize(img, threshold));
    } catch (const EmptyFigureError& e) {
        throw EmptyFigureError(std::string(role) + ": " + e.what());
    } catch (const DegenerateFigureError& e) {
        throw DegenerateFigureError(std::string(role) + ": " + e.what());
    }
}

} // namespace

AlignedFigure orient_choice(const FeatureProfiles& target_features,
                            const PointSet& choice_points) {
    auto [plain, flipped] = candidate_orientations(choice_points);
    const double plain_sum = base_feature_sum(target_features, extract_features(plain.points));
    const double flipped_sum =
        base_feature_sum(target_features, extract_features(flipped.points));
    return flipped_sum < plain_sum ? std::move(flipped) : std::move(plain);
}

AlignedFigure orient_choice(const AlignedFigure& target, const PointSet& choice_points) {
    return orient_choice(extract_features(target.points), choice_points);
}

double overall_difference(const FeatureProfiles& target, const FeatureProfiles& choice,
                          const FeatureSelection& selection) {
    double sum = 0.0;
    for (const BaseFeature f : all_base_features)
        if (selection.base[static_cast<std::size_t>(f)])
            sum += base_difference(target, choice, f);
    for (const BaseFeature f : all_base_features)
        if (selection.self[static_cast<std::size_t>(f)])
            sum += profile_difference(target.self_profile(f), choice.self_profile(f));
    return sum;
}

Decision solve_points(const PointSet& target, const PointSet& choice_a,
                      const PointSet& choice_b, const FeatureSelection& selection) {
    if (selection.empty())
        throw std::invalid_argument("empty feature selection");

    const AlignedFigure aligned_target = align_figure(target, principal_angle(target), false);
    const FeatureProfiles target_features = extract_features(aligned_target.points);

    Decision d;
    const PointSet* choices[2] = {&choice_a, &choice_b};
    for (int i = 0; i < 2; ++i) {
        const AlignedFigure oriented = orient_choice(target_features, *choices[i]);
        d.orientation_flags[static_cast<std::size_t>(i)] = oriented.flipped;
        d.differences[static_cast<std::size_t>(i)] =
            overall_difference(target_features, extract_features(oriented.points), selection);
    }

    const double d0 = d.differences[0];
    const double d1 = d.differences[1];
    d.tie = std::abs(d0 - d1) <= tie_relative_tolerance * std::max(d0, d1);
    d.chosen_index = (d.tie || d0 <= d1) ? 0 : 1;
    return d;
}

Decision solve_trial(const GrayImage& target, const GrayImage& choice_a,
                     const GrayImage& choice_b, const ModelConfig& config) {
    const PointSet t = figure_points(target, config.threshold, "target");
    const PointSet a = figure_points(choice_a, config.threshold, "choice_a");
    const PointSet b = figure_points(choice_b, config.threshold, "choice_b");
    return solve_points(t, a, b, config.selection);
}

} // namespace geomint
