#include "geomint/trials.hpp"

#include <stdexcept>

namespace geomint {

std::string_view to_string(Category c) {
    switch (c) {
    case Category::symmetrical_figures: return "Symmetrical figures";
    case Category::chiral_figures: return "Chiral figures";
    case Category::euclidean_geometry: return "Euclidean geometry";
    case Category::geometrical_figures: return "Geometrical figures";
    case Category::geometrical_transformations: return "Geometrical transformations";
    case Category::metric_properties: return "Metric properties";
    case Category::topology: return "Topology";
    }
    return "?";
}

Category category_from_string(std::string_view name) {
    for (const Category c : all_categories)
        if (name == to_string(c))
            return c;
    throw std::invalid_argument("unknown category: " + std::string(name));
}

std::vector<Trial> generate_trials(const Problem& problem) {
    if (problem.odd_index < 0 || problem.odd_index >= 6)
        throw std::invalid_argument("odd_index out of range");
    for (const std::string& img : problem.images)
        if (img.empty())
            throw std::invalid_argument("problem has an empty image reference");

    std::array<int, 5> conforming{};
    int n = 0;
    for (int i = 0; i < 6; ++i)
        if (i != problem.odd_index)
            conforming[static_cast<std::size_t>(n++)] = i;

    const std::string& odd_image = problem.images[static_cast<std::size_t>(problem.odd_index)];

    std::vector<Trial> trials;
    trials.reserve(20);
    for (const int target : conforming)
        for (const int choice : conforming) {
            if (choice == target)
                continue;
            Trial t;
            t.concept_id = problem.concept_id;
            t.category = problem.category;
            t.target = problem.images[static_cast<std::size_t>(target)];
            // Alternate the correct side with trial parity: 10 left, 10 right.
            t.correct_index = static_cast<int>(trials.size() % 2);
            t.choices[static_cast<std::size_t>(t.correct_index)] =
                problem.images[static_cast<std::size_t>(choice)];
            t.choices[static_cast<std::size_t>(1 - t.correct_index)] = odd_image;
            trials.push_back(std::move(t));
        }
    return trials;
}

} // namespace geomint
