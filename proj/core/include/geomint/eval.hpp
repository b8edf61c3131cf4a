#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geomint/solver.hpp"
#include "geomint/trials.hpp"

namespace geomint {

struct ConceptStats {
    std::string concept_name;
    Category category = Category::topology;
    int n_trials = 0;
    int n_correct = 0;

    double accuracy() const { return static_cast<double>(n_correct) / n_trials; }

    friend bool operator==(const ConceptStats&, const ConceptStats&) = default;
};

struct CategoryStats {
    int n_trials = 0;
    int n_correct = 0;

    double accuracy() const { return static_cast<double>(n_correct) / n_trials; }

    friend bool operator==(const CategoryStats&, const CategoryStats&) = default;
};

struct TrialFailure {
    std::size_t trial_index = 0;
    std::string message;

    friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

/// Aggregated results of one solver configuration over a trial set.
/// Accuracies are always n_correct / n_trials; the overall accuracy is
/// undefined for an empty evaluation.
struct EvalReport {
    ModelConfig config;
    std::map<int, ConceptStats> per_concept;
    std::map<Category, CategoryStats> per_category;
    int n_trials = 0;
    int n_correct = 0;
    bool with_reference = false;
    std::map<int, double> concept_deltas;        // measured - reference human
    std::map<Category, double> category_deltas;  // measured - reference human
    std::vector<TrialFailure> failures;          // skipped trials (non-strict mode)

    std::optional<double> overall_accuracy() const {
        if (n_trials == 0)
            return std::nullopt;
        return static_cast<double>(n_correct) / n_trials;
    }

    friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

using TrialSolver = std::function<Decision(const Trial&, const ModelConfig&)>;

struct EvalOptions {
    bool strict = true;        // abort on per-trial errors instead of recording them
    int jobs = 1;              // worker threads; the report is order-independent
    bool with_reference = false;
    TrialSolver solver;        // empty = image pipeline via load_image + solve_trial
};

/// Solves every trial and aggregates accuracy by concept and category.
/// A trial counts as correct iff the decision picks the conforming choice.
EvalReport evaluate(const std::vector<Trial>& trials, const ModelConfig& config,
                    const EvalOptions& options = {});

enum class ReportFormat { table, csv, json };

std::string render_report(const EvalReport& report, ReportFormat format);
EvalReport parse_report_csv(const std::string& text);
EvalReport parse_report_json(const std::string& text);

/// Reference accuracies bundled for comparison columns: average human
/// accuracy from the published 2-AFC study, and the accuracy this model
/// family reached on the original (non-redistributable) stimulus set for
/// the three shipped presets. Comparison data only — synthetic stimuli are
/// not expected to reproduce these numbers.
struct ConceptReference {
    int id;
    Category category;
    std::string_view name;
    double human_accuracy;
};

struct ReferenceData {
    std::map<Category, std::array<double, 3>> model_by_category; // preset order: cs, cs+sspread, four
    std::array<double, 3> model_overall;
    std::map<Category, double> human_by_category;
    std::vector<ConceptReference> concepts;

    const ConceptReference* find_concept(int id) const;
};

const ReferenceData& reference_data();

/// Side-by-side table of measured preset accuracies against the bundled
/// reference accuracies. Expects reports in preset order cs, cs+sspread,
/// four.
std::string render_preset_comparison(const std::array<EvalReport, 3>& reports);

} // namespace geomint
