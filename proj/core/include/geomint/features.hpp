#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geomint/raster.hpp"

namespace geomint {

/// Slicing direction. Vertical slices the figure into horizontal bands (one
/// per y bin) and measures their x values; horizontal does the transpose.
enum class Axis { vertical, horizontal };

enum class BaseFeature { center_shift, area, spread };

inline constexpr std::array<BaseFeature, 3> all_base_features{
    BaseFeature::center_shift, BaseFeature::area, BaseFeature::spread};

std::string_view to_string(BaseFeature f);

/// Bin index of a slice coordinate. Bins are unit intervals [b-0.5, b+0.5),
/// so ties at .5 round toward +infinity.
inline int coordinate_bin(double c) {
    return static_cast<int>(std::floor(c + 0.5));
}

/// A real-valued curve over consecutive integer bins. `offset` is the index
/// of the bin that contains coordinate 0 (the centroid bin); the stored
/// range always includes it. Bins outside the stored range read as 0, the
/// neutral value for all three base features.
struct Profile {
    std::vector<double> values;
    int offset = 0;

    int lo() const { return -offset; }
    int hi() const { return static_cast<int>(values.size()) - 1 - offset; }

    double at(int bin) const {
        const int i = bin + offset;
        if (i < 0 || i >= static_cast<int>(values.size()))
            return 0.0;
        return values[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const Profile&, const Profile&) = default;
};

/// Groups points into slices: bin of the axis coordinate -> cross-axis
/// coordinates in point order. Every point lands in exactly one bin.
std::map<int, std::vector<double>> slice_bins(const PointSet& points, Axis axis);

/// Per-slice mean of the cross-axis coordinate; empty bins inside the
/// stored range read 0 (the centroid line).
Profile center_shift_profile(const PointSet& points, Axis axis);

/// Per-slice point count. Values sum to the number of points.
Profile area_profile(const PointSet& points, Axis axis);

/// Per-slice population standard deviation of the cross-axis coordinate;
/// singleton slices yield 0.
Profile spread_profile(const PointSet& points, Axis axis);

Profile base_profile(const PointSet& points, BaseFeature feature, Axis axis);

/// Signed difference vertical - horizontal over the union of the two
/// domains, aligned at their centroid bins.
Profile self_symmetry(const Profile& vertical, const Profile& horizontal);

/// Sum of absolute per-bin differences over the union domain, profiles
/// aligned at their centroid bins. A pseudometric on same-kind profiles.
double profile_difference(const Profile& p, const Profile& q);

/// All nine curves of one aligned figure: the three base features along both
/// axes plus their self-symmetry differences.
struct FeatureProfiles {
    std::array<Profile, 3> base_v; // indexed by BaseFeature
    std::array<Profile, 3> base_h;
    std::array<Profile, 3> self;

    const Profile& base(BaseFeature f, Axis axis) const {
        const auto i = static_cast<std::size_t>(f);
        return axis == Axis::vertical ? base_v[i] : base_h[i];
    }
    const Profile& self_profile(BaseFeature f) const {
        return self[static_cast<std::size_t>(f)];
    }

    friend bool operator==(const FeatureProfiles&, const FeatureProfiles&) = default;
};

FeatureProfiles extract_features(const PointSet& points);

/// Dissimilarity in one base feature: vertical plus horizontal profile
/// difference.
double base_difference(const FeatureProfiles& target, const FeatureProfiles& choice,
                       BaseFeature feature);

/// Which of the six features participate in scoring, all with weight 1.
/// A base entry covers both the vertical and horizontal profiles; a self
/// entry names one combined profile.
struct FeatureSelection {
    std::array<bool, 3> base{};
    std::array<bool, 3> self{};

    bool empty() const;

    friend bool operator==(const FeatureSelection&, const FeatureSelection&) = default;
};

inline constexpr std::array<std::string_view, 3> preset_names{"cs", "cs+sspread", "four"};

/// Shipped presets: "cs" (center shift, base), "cs+sspread" (adds spread
/// self-symmetry), "four" (center shift base plus all three self features).
/// Throws std::invalid_argument for unknown names.
FeatureSelection preset_selection(std::string_view name);

/// Parses an explicit list such as "center_shift:base,spread:self".
/// Returns std::nullopt on malformed input.
std::optional<FeatureSelection> parse_selection_list(std::string_view list);

/// Inverse of parse_selection_list, for report echoes.
std::string selection_to_list(const FeatureSelection& sel);

} // namespace geomint
