#include "geomint/eval.hpp"

namespace geomint {

namespace {

// Transcribed comparison constants: average human accuracy per concept and
// category from the published 2-AFC study, and the accuracy this model
// family reached on the original stimulus set per preset (order: cs,
// cs+sspread, four). The original stimuli are not redistributable, so these
// are labels for report columns, not targets for the synthetic suite.
ReferenceData make_reference_data() {
    ReferenceData ref;

    ref.model_by_category = {
        {Category::symmetrical_figures, {0.90, 0.85, 0.87}},
        {Category::chiral_figures, {1.00, 1.00, 1.00}},
        {Category::euclidean_geometry, {0.88, 0.87, 0.87}},
        {Category::geometrical_figures, {0.63, 0.83, 0.86}},
        {Category::geometrical_transformations, {0.73, 0.75, 0.78}},
        {Category::metric_properties, {0.90, 0.90, 0.91}},
        {Category::topology, {0.55, 0.58, 0.64}},
    };
    ref.model_overall = {0.784, 0.828, 0.847};

    ref.human_by_category = {
        {Category::symmetrical_figures, 0.820},
        {Category::chiral_figures, 0.962},
        {Category::euclidean_geometry, 0.912},
        {Category::geometrical_figures, 0.714},
        {Category::geometrical_transformations, 0.763},
        {Category::metric_properties, 0.820},
        {Category::topology, 0.822},
    };

    ref.concepts = {
        {28, Category::symmetrical_figures, "Vertical axis", 0.858},
        {30, Category::symmetrical_figures, "Oblique axis", 0.875},
        {29, Category::symmetrical_figures, "Horizontal axis", 0.727},
        {44, Category::chiral_figures, "Oblique axis", 0.655},
        {38, Category::chiral_figures, "Oblique axis", 0.716},
        {42, Category::chiral_figures, "Vertical axis", 0.943},
        {41, Category::chiral_figures, "Vertical axis", 0.966},
        {14, Category::euclidean_geometry, "Right angle", 0.943},
        {11, Category::euclidean_geometry, "Alignment of points in lines", 0.949},
        {10, Category::euclidean_geometry, "Straight line", 0.960},
        {15, Category::euclidean_geometry, "Right angle", 0.977},
        {7, Category::euclidean_geometry, "Alignment of points in lines", 0.983},
        {8, Category::euclidean_geometry, "Curve", 0.960},
        {40, Category::euclidean_geometry, "Secant lines", 0.932},
        {37, Category::euclidean_geometry, "Parallel lines", 0.989},
        {23, Category::geometrical_figures, "Square", 0.852},
        {9, Category::geometrical_figures, "Convex shape", 0.938},
        {26, Category::geometrical_figures, "Trapezoid", 0.892},
        {17, Category::geometrical_figures, "Circle", 0.966},
        {20, Category::geometrical_figures, "Equilateral triangle", 0.972},
        {24, Category::geometrical_figures, "Rectangle", 0.943},
        {25, Category::geometrical_figures, "Parallelogram", 0.886},
        {12, Category::geometrical_figures, "Quadrilateral", 0.949},
        {13, Category::geometrical_figures, "Right-angled triangle", 0.813},
        {33, Category::geometrical_transformations, "Horizontal symmetry", 0.625},
        {34, Category::geometrical_transformations, "Rotation", 0.483},
        {35, Category::geometrical_transformations, "Oblique symmetry", 0.767},
        {36, Category::geometrical_transformations, "Homothety (fixed orientation)", 0.744},
        {39, Category::geometrical_transformations, "Homothety (fixed size)", 0.710},
        {27, Category::geometrical_transformations, "Vertical symmetry", 0.731},
        {31, Category::geometrical_transformations, "Translation", 0.813},
        {32, Category::geometrical_transformations, "Point symmetry", 0.835},
        {22, Category::metric_properties, "Center of quadrilateral", 0.477},
        {19, Category::metric_properties, "Middle of segment", 0.682},
        {45, Category::metric_properties, "Increasing distance", 0.744},
        {21, Category::metric_properties, "Fixed proportion", 0.727},
        {18, Category::metric_properties, "Center of circle", 0.903},
        {16, Category::metric_properties, "Distance", 0.966},
        {43, Category::topology, "Equidistance", 0.841},
        {6, Category::topology, "Connectedness", 0.813},
        {5, Category::topology, "Closure", 0.813},
        {4, Category::topology, "Inside", 0.977},
        {3, Category::topology, "Holes", 0.688},
    };
    return ref;
}

} // namespace

const ConceptReference* ReferenceData::find_concept(int id) const {
    for (const ConceptReference& c : concepts)
        if (c.id == id)
            return &c;
    return nullptr;
}

const ReferenceData& reference_data() {
    static const ReferenceData ref = make_reference_data();
    return ref;
}

} // namespace geomint
