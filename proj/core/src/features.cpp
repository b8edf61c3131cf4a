#include "geomint/features.hpp"

#include <algorithm>
#include <stdexcept>

namespace geomint {

std::string_view to_string(BaseFeature f) {
    switch (f) {
    case BaseFeature::center_shift: return "center_shift";
    case BaseFeature::area: return "area";
    case BaseFeature::spread: return "spread";
    }
    return "?";
}

std::map<int, std::vector<double>> slice_bins(const PointSet& points, Axis axis) {
    std::map<int, std::vector<double>> bins;
    for (const Point& p : points) {
        if (axis == Axis::vertical)
            bins[coordinate_bin(p.y)].push_back(p.x);
        else
            bins[coordinate_bin(p.x)].push_back(p.y);
    }
    return bins;
}

namespace {

// Empty shell spanning the occupied bins plus the centroid bin.
Profile make_domain(const std::map<int, std::vector<double>>& bins) {
    const int lo = std::min(0, bins.begin()->first);
    const int hi = std::max(0, bins.rbegin()->first);
    Profile p;
    p.values.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
    p.offset = -lo;
    return p;
}

double slice_mean(const std::vector<double>& xs) {
    double sum = 0.0;
    for (const double x : xs)
        sum += x;
    return sum / static_cast<double>(xs.size());
}

void require_nonempty(const PointSet& points) {
    if (points.empty())
        throw EmptyFigureError("profile of an empty point set");
}

} // namespace

Profile center_shift_profile(const PointSet& points, Axis axis) {
    require_nonempty(points);
    const auto bins = slice_bins(points, axis);
    Profile p = make_domain(bins);
    for (const auto& [bin, xs] : bins)
        p.values[static_cast<std::size_t>(bin + p.offset)] = slice_mean(xs);
    return p;
}

Profile area_profile(const PointSet& points, Axis axis) {
    require_nonempty(points);
    const auto bins = slice_bins(points, axis);
    Profile p = make_domain(bins);
    for (const auto& [bin, xs] : bins)
        p.values[static_cast<std::size_t>(bin + p.offset)] = static_cast<double>(xs.size());
    return p;
}

Profile spread_profile(const PointSet& points, Axis axis) {
    require_nonempty(points);
    const auto bins = slice_bins(points, axis);
    Profile p = make_domain(bins);
    for (const auto& [bin, xs] : bins) {
        const double mean = slice_mean(xs);
        double ss = 0.0;
        for (const double x : xs)
            ss += (x - mean) * (x - mean);
        p.values[static_cast<std::size_t>(bin + p.offset)] =
            std::sqrt(ss / static_cast<double>(xs.size()));
    }
    return p;
}

Profile base_profile(const PointSet& points, BaseFeature feature, Axis axis) {
    switch (feature) {
    case BaseFeature::center_shift: return center_shift_profile(points, axis);
    case BaseFeature::area: return area_profile(points, axis);
    case BaseFeature::spread: return spread_profile(points, axis);
    }
    throw std::invalid_argument("unknown base feature");
}

Profile self_symmetry(const Profile& vertical, const Profile& horizontal) {
    const int lo = std::min(vertical.lo(), horizontal.lo());
    const int hi = std::max(vertical.hi(), horizontal.hi());
    Profile out;
    out.offset = -lo;
    out.values.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int b = lo; b <= hi; ++b)
        out.values.push_back(vertical.at(b) - horizontal.at(b));
    return out;
}

double profile_difference(const Profile& p, const Profile& q) {
    const int lo = std::min(p.lo(), q.lo());
    const int hi = std::max(p.hi(), q.hi());
    double sum = 0.0;
    for (int b = lo; b <= hi; ++b)
        sum += std::abs(p.at(b) - q.at(b));
    return sum;
}

FeatureProfiles extract_features(const PointSet& points) {
    FeatureProfiles fp;
    for (const BaseFeature f : all_base_features) {
        const auto i = static_cast<std::size_t>(f);
        fp.base_v[i] = base_profile(points, f, Axis::vertical);
        fp.base_h[i] = base_profile(points, f, Axis::horizontal);
        fp.self[i] = self_symmetry(fp.base_v[i], fp.base_h[i]);
    }
    return fp;
}

double base_difference(const FeatureProfiles& target, const FeatureProfiles& choice,
                       BaseFeature feature) {
    return profile_difference(target.base(feature, Axis::vertical),
                              choice.base(feature, Axis::vertical)) +
           profile_difference(target.base(feature, Axis::horizontal),
                              choice.base(feature, Axis::horizontal));
}

bool FeatureSelection::empty() const {
    for (const bool b : base)
        if (b)
            return false;
    for (const bool s : self)
        if (s)
            return false;
    return true;
}

FeatureSelection preset_selection(std::string_view name) {
    FeatureSelection sel;
    if (name == "cs") {
        sel.base[static_cast<std::size_t>(BaseFeature::center_shift)] = true;
    } else if (name == "cs+sspread") {
        sel.base[static_cast<std::size_t>(BaseFeature::center_shift)] = true;
        sel.self[static_cast<std::size_t>(BaseFeature::spread)] = true;
    } else if (name == "four") {
        sel.base[static_cast<std::size_t>(BaseFeature::center_shift)] = true;
        sel.self[static_cast<std::size_t>(BaseFeature::center_shift)] = true;
        sel.self[static_cast<std::size_t>(BaseFeature::area)] = true;
        sel.self[static_cast<std::size_t>(BaseFeature::spread)] = true;
    } else {
        throw std::invalid_argument("unknown feature preset: " + std::string(name));
    }
    return sel;
}

std::optional<FeatureSelection> parse_selection_list(std::string_view list) {
    FeatureSelection sel;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const std::size_t comma = std::min(list.find(',', pos), list.size());
        const std::string_view item = list.substr(pos, comma - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos)
            return std::nullopt;
        const std::string_view feature = item.substr(0, colon);
        const std::string_view kind = item.substr(colon + 1);
        std::size_t fi = 3;
        for (const BaseFeature f : all_base_features)
            if (feature == to_string(f))
                fi = static_cast<std::size_t>(f);
        if (fi == 3)
            return std::nullopt;
        if (kind == "base")
            sel.base[fi] = true;
        else if (kind == "self")
            sel.self[fi] = true;
        else
            return std::nullopt;
        if (comma == list.size())
            break;
        pos = comma + 1;
    }
    if (sel.empty())
        return std::nullopt;
    return sel;
}

std::string selection_to_list(const FeatureSelection& sel) {
    std::string out;
    const auto append = [&out](std::string_view feature, std::string_view kind) {
        if (!out.empty())
            out += ',';
        out += feature;
        out += ':';
        out += kind;
    };
    for (const BaseFeature f : all_base_features)
        if (sel.base[static_cast<std::size_t>(f)])
            append(to_string(f), "base");
    for (const BaseFeature f : all_base_features)
        if (sel.self[static_cast<std::size_t>(f)])
            append(to_string(f), "self");
    return out;
}

} // namespace geomint
