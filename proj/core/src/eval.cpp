#include "geomint/eval.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "geomint/raster.hpp"

namespace geomint {

namespace {

// Name lookup for per-concept rows; trial manifests carry ids only.
std::string concept_name_for(int concept_id) {
    if (const ConceptReference* ref = reference_data().find_concept(concept_id))
        return std::string(ref->name);
    return "concept_" + std::to_string(concept_id);
}

struct TrialOutcome {
    bool solved = false;
    bool correct = false;
    std::string error;
};

} // namespace

EvalReport evaluate(const std::vector<Trial>& trials, const ModelConfig& config,
                    const EvalOptions& options) {
    if (config.selection.empty())
        throw std::invalid_argument("empty feature selection");

    TrialSolver solver = options.solver;
    // The caches outlive `solver`, which captures them by reference; both
    // are read-only while worker threads run.
    std::unordered_map<std::string, GrayImage> image_cache;
    std::unordered_map<std::string, std::string> load_errors;
    if (!solver) {
        for (const Trial& t : trials)
            for (const std::string* ref : {&t.target, &t.choices[0], &t.choices[1]}) {
                if (image_cache.count(*ref) || load_errors.count(*ref))
                    continue;
                try {
                    image_cache.emplace(*ref, load_image(*ref));
                } catch (const std::exception& e) {
                    if (options.strict)
                        throw;
                    load_errors.emplace(*ref, e.what());
                }
            }
        solver = [&image_cache, &load_errors](const Trial& t, const ModelConfig& cfg) {
            for (const std::string* ref : {&t.target, &t.choices[0], &t.choices[1]}) {
                const auto it = load_errors.find(*ref);
                if (it != load_errors.end())
                    throw ImageIoError(it->second);
            }
            return solve_trial(image_cache.at(t.target), image_cache.at(t.choices[0]),
                               image_cache.at(t.choices[1]), cfg);
        };
    }

    std::vector<TrialOutcome> outcomes(trials.size());
    const auto solve_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                const Decision d = solver(trials[i], config);
                outcomes[i].solved = true;
                outcomes[i].correct = d.chosen_index == trials[i].correct_index;
            } catch (const std::exception& e) {
                if (options.strict)
                    throw;
                outcomes[i].error = e.what();
            }
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || trials.size() < 2) {
        solve_range(0, trials.size());
    } else {
        const std::size_t n_workers =
            std::min<std::size_t>(static_cast<std::size_t>(jobs), trials.size());
        std::vector<std::thread> workers;
        std::exception_ptr first_error;
        std::mutex error_mutex;
        const std::size_t chunk = (trials.size() + n_workers - 1) / n_workers;
        for (std::size_t w = 0; w < n_workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(trials.size(), begin + chunk);
            workers.emplace_back([&, begin, end] {
                try {
                    solve_range(begin, end);
                } catch (...) {
                    const std::lock_guard lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                }
            });
        }
        for (std::thread& t : workers)
            t.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }

    EvalReport report;
    report.config = config;
    report.with_reference = options.with_reference;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const Trial& t = trials[i];
        const TrialOutcome& o = outcomes[i];
        if (!o.solved) {
            report.failures.push_back({i, o.error});
            continue;
        }
        ConceptStats& cs = report.per_concept[t.concept_id];
        if (cs.n_trials == 0) {
            cs.concept_name = concept_name_for(t.concept_id);
            cs.category = t.category;
        }
        cs.n_trials += 1;
        cs.n_correct += o.correct ? 1 : 0;
        CategoryStats& cat = report.per_category[t.category];
        cat.n_trials += 1;
        cat.n_correct += o.correct ? 1 : 0;
        report.n_trials += 1;
        report.n_correct += o.correct ? 1 : 0;
    }

    if (options.with_reference) {
        const ReferenceData& ref = reference_data();
        for (const auto& [id, stats] : report.per_concept)
            if (const ConceptReference* cr = ref.find_concept(id))
                report.concept_deltas[id] = stats.accuracy() - cr->human_accuracy;
        for (const auto& [cat, stats] : report.per_category) {
            const auto it = ref.human_by_category.find(cat);
            if (it != ref.human_by_category.end())
                report.category_deltas[cat] = stats.accuracy() - it->second;
        }
    }
    return report;
}

} // namespace geomint
