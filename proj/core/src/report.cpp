#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "geomint/eval.hpp"

namespace geomint {

namespace {

using nlohmann::json;

std::string fixed(double v, int precision = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string pad(std::string s, std::size_t width, bool right = false) {
    if (s.size() >= width)
        return s;
    const std::string fill(width - s.size(), ' ');
    return right ? fill + s : s + fill;
}

int category_order(Category c) {
    for (std::size_t i = 0; i < all_categories.size(); ++i)
        if (all_categories[i] == c)
            return static_cast<int>(i);
    return static_cast<int>(all_categories.size());
}

std::vector<int> sorted_concept_ids(const EvalReport& report) {
    std::vector<int> ids;
    ids.reserve(report.per_concept.size());
    for (const auto& [id, stats] : report.per_concept)
        ids.push_back(id);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        const int oa = category_order(report.per_concept.at(a).category);
        const int ob = category_order(report.per_concept.at(b).category);
        return oa != ob ? oa < ob : a < b;
    });
    return ids;
}

constexpr std::string_view csv_header =
    "concept_id,concept_name,category,n_trials,n_correct,accuracy,reference_human,delta";

std::string render_csv(const EvalReport& report) {
    std::string out(csv_header);
    out += '\n';
    const ReferenceData& ref = reference_data();
    for (const int id : sorted_concept_ids(report)) {
        const ConceptStats& stats = report.per_concept.at(id);
        out += std::to_string(id);
        out += ',';
        out += stats.concept_name;
        out += ',';
        out += to_string(stats.category);
        out += ',';
        out += std::to_string(stats.n_trials);
        out += ',';
        out += std::to_string(stats.n_correct);
        out += ',';
        out += fixed(stats.accuracy());
        out += ',';
        const ConceptReference* cr =
            report.with_reference ? ref.find_concept(id) : nullptr;
        if (cr) {
            out += fixed(cr->human_accuracy);
            out += ',';
            out += fixed(stats.accuracy() - cr->human_accuracy);
        } else {
            out += ',';
        }
        out += '\n';
    }
    return out;
}

std::string render_table(const EvalReport& report) {
    std::ostringstream out;
    out << "trials: " << report.n_trials << "   correct: " << report.n_correct
        << "   accuracy: ";
    if (const auto acc = report.overall_accuracy())
        out << fixed(*acc, 4);
    else
        out << "undefined";
    if (!report.config.preset_name.empty())
        out << "   (preset: " << report.config.preset_name
            << ", threshold: " << static_cast<int>(report.config.threshold) << ")";
    out << "\n";
    if (!report.failures.empty())
        out << "skipped trials: " << report.failures.size() << "\n";
    if (report.per_concept.empty())
        return out.str();

    out << "\n" << pad("category", 30) << pad("trials", 8, true) << pad("correct", 9, true)
        << pad("accuracy", 10, true);
    if (report.with_reference)
        out << pad("human", 9, true) << pad("delta", 9, true);
    out << "\n";
    for (const Category c : all_categories) {
        const auto it = report.per_category.find(c);
        if (it == report.per_category.end())
            continue;
        out << pad(std::string(to_string(c)), 30) << pad(std::to_string(it->second.n_trials), 8, true)
            << pad(std::to_string(it->second.n_correct), 9, true)
            << pad(fixed(it->second.accuracy(), 4), 10, true);
        if (report.with_reference) {
            const auto human = reference_data().human_by_category.find(c);
            if (human != reference_data().human_by_category.end()) {
                out << pad(fixed(human->second, 4), 9, true)
                    << pad(fixed(it->second.accuracy() - human->second, 4), 9, true);
            } else {
                out << pad("-", 9, true) << pad("-", 9, true);
            }
        }
        out << "\n";
    }

    out << "\n" << pad("concept", 8, true) << "  " << pad("name", 30)
        << pad("category", 30) << pad("trials", 8, true) << pad("correct", 9, true)
        << pad("accuracy", 10, true);
    if (report.with_reference)
        out << pad("human", 9, true) << pad("delta", 9, true);
    out << "\n";
    for (const int id : sorted_concept_ids(report)) {
        const ConceptStats& stats = report.per_concept.at(id);
        out << pad(std::to_string(id), 8, true) << "  " << pad(stats.concept_name, 30)
            << pad(std::string(to_string(stats.category)), 30)
            << pad(std::to_string(stats.n_trials), 8, true)
            << pad(std::to_string(stats.n_correct), 9, true)
            << pad(fixed(stats.accuracy(), 4), 10, true);
        if (report.with_reference) {
            const ConceptReference* cr = reference_data().find_concept(id);
            if (cr) {
                out << pad(fixed(cr->human_accuracy, 4), 9, true)
                    << pad(fixed(stats.accuracy() - cr->human_accuracy, 4), 9, true);
            } else {
                out << pad("-", 9, true) << pad("-", 9, true);
            }
        }
        out << "\n";
    }
    return out.str();
}

json config_to_json(const ModelConfig& cfg) {
    return json{{"preset_name", cfg.preset_name},
                {"threshold", cfg.threshold},
                {"selection", selection_to_list(cfg.selection)}};
}

ModelConfig config_from_json(const json& j) {
    ModelConfig cfg;
    cfg.preset_name = j.at("preset_name").get<std::string>();
    cfg.threshold = static_cast<std::uint8_t>(j.at("threshold").get<int>());
    const std::string list = j.at("selection").get<std::string>();
    if (!list.empty()) {
        if (const auto sel = parse_selection_list(list))
            cfg.selection = *sel;
        else
            throw std::invalid_argument("bad selection list in report: " + list);
    }
    return cfg;
}

std::string render_json(const EvalReport& report) {
    json j;
    j["config"] = config_to_json(report.config);
    j["n_trials"] = report.n_trials;
    j["n_correct"] = report.n_correct;
    if (const auto acc = report.overall_accuracy())
        j["overall_accuracy"] = *acc;
    else
        j["overall_accuracy"] = nullptr;
    json concepts = json::object();
    for (const auto& [id, stats] : report.per_concept)
        concepts[std::to_string(id)] = {{"concept_name", stats.concept_name},
                                        {"category", to_string(stats.category)},
                                        {"n_trials", stats.n_trials},
                                        {"n_correct", stats.n_correct},
                                        {"accuracy", stats.accuracy()}};
    j["per_concept"] = std::move(concepts);
    json categories = json::object();
    for (const auto& [cat, stats] : report.per_category)
        categories[std::string(to_string(cat))] = {{"n_trials", stats.n_trials},
                                                   {"n_correct", stats.n_correct},
                                                   {"accuracy", stats.accuracy()}};
    j["per_category"] = std::move(categories);
    j["with_reference"] = report.with_reference;
    json concept_deltas = json::object();
    for (const auto& [id, delta] : report.concept_deltas)
        concept_deltas[std::to_string(id)] = delta;
    j["concept_deltas"] = std::move(concept_deltas);
    json category_deltas = json::object();
    for (const auto& [cat, delta] : report.category_deltas)
        category_deltas[std::string(to_string(cat))] = delta;
    j["category_deltas"] = std::move(category_deltas);
    json failures = json::array();
    for (const TrialFailure& f : report.failures)
        failures.push_back({{"trial_index", f.trial_index}, {"message", f.message}});
    j["failures"] = std::move(failures);
    return j.dump(2) + "\n";
}

} // namespace

std::string render_report(const EvalReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::table: return render_table(report);
    case ReportFormat::csv: return render_csv(report);
    case ReportFormat::json: return render_json(report);
    }
    throw std::invalid_argument("unknown report format");
}

EvalReport parse_report_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != csv_header)
        throw std::invalid_argument("bad report CSV header");

    EvalReport report;
    const ReferenceData& ref = reference_data();
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma - pos));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        if (fields.size() != 8)
            throw std::invalid_argument("bad report CSV row: " + line);

        const int id = std::stoi(fields[0]);
        ConceptStats stats;
        stats.concept_name = fields[1];
        stats.category = category_from_string(fields[2]);
        stats.n_trials = std::stoi(fields[3]);
        stats.n_correct = std::stoi(fields[4]);
        report.per_concept[id] = stats;
        if (!fields[6].empty())
            report.with_reference = true;

        CategoryStats& cat = report.per_category[stats.category];
        cat.n_trials += stats.n_trials;
        cat.n_correct += stats.n_correct;
        report.n_trials += stats.n_trials;
        report.n_correct += stats.n_correct;
    }

    if (report.with_reference) {
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

EvalReport parse_report_json(const std::string& text) {
    const json j = json::parse(text);
    EvalReport report;
    report.config = config_from_json(j.at("config"));
    report.n_trials = j.at("n_trials").get<int>();
    report.n_correct = j.at("n_correct").get<int>();
    for (const auto& [key, value] : j.at("per_concept").items()) {
        ConceptStats stats;
        stats.concept_name = value.at("concept_name").get<std::string>();
        stats.category = category_from_string(value.at("category").get<std::string>());
        stats.n_trials = value.at("n_trials").get<int>();
        stats.n_correct = value.at("n_correct").get<int>();
        report.per_concept[std::stoi(key)] = std::move(stats);
    }
    for (const auto& [key, value] : j.at("per_category").items()) {
        CategoryStats stats;
        stats.n_trials = value.at("n_trials").get<int>();
        stats.n_correct = value.at("n_correct").get<int>();
        report.per_category[category_from_string(key)] = stats;
    }
    report.with_reference = j.at("with_reference").get<bool>();
    for (const auto& [key, value] : j.at("concept_deltas").items())
        report.concept_deltas[std::stoi(key)] = value.get<double>();
    for (const auto& [key, value] : j.at("category_deltas").items())
        report.category_deltas[category_from_string(key)] = value.get<double>();
    for (const json& f : j.at("failures"))
        report.failures.push_back({f.at("trial_index").get<std::size_t>(),
                                   f.at("message").get<std::string>()});
    return report;
}

std::string render_preset_comparison(const std::array<EvalReport, 3>& reports) {
    const ReferenceData& ref = reference_data();
    std::ostringstream out;
    out << "Measured preset accuracy vs reference accuracy on the original stimuli\n\n";
    out << pad("category", 30);
    for (const std::string_view preset : preset_names)
        out << pad(std::string(preset), 12, true) << pad("reference", 11, true);
    out << "\n";
    for (const Category c : all_categories) {
        out << pad(std::string(to_string(c)), 30);
        for (std::size_t p = 0; p < 3; ++p) {
            const auto it = reports[p].per_category.find(c);
            out << pad(it != reports[p].per_category.end() ? fixed(it->second.accuracy(), 4)
                                                           : "-",
                       12, true);
            out << pad(fixed(ref.model_by_category.at(c)[p], 4), 11, true);
        }
        out << "\n";
    }
    out << pad("overall", 30);
    for (std::size_t p = 0; p < 3; ++p) {
        const auto acc = reports[p].overall_accuracy();
        out << pad(acc ? fixed(*acc, 4) : "-", 12, true)
            << pad(fixed(ref.model_overall[p], 4), 11, true);
    }
    out << "\n";
    return out.str();
}

} // namespace geomint
