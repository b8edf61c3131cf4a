#include <fstream>

#include <json.hpp>

#include "geomint/trials.hpp"

namespace geomint {

namespace {

using nlohmann::json;

json problem_to_json(const Problem& p) {
    return json{{"concept_id", p.concept_id},
                {"concept_name", p.concept_name},
                {"category", to_string(p.category)},
                {"images", p.images},
                {"odd_index", p.odd_index}};
}

Problem problem_from_json(const json& j) {
    Problem p;
    p.concept_id = j.at("concept_id").get<int>();
    p.concept_name = j.at("concept_name").get<std::string>();
    p.category = category_from_string(j.at("category").get<std::string>());
    const auto images = j.at("images").get<std::vector<std::string>>();
    if (images.size() != 6)
        throw std::invalid_argument("problem manifest must list exactly 6 images");
    std::copy(images.begin(), images.end(), p.images.begin());
    p.odd_index = j.at("odd_index").get<int>();
    if (p.odd_index < 0 || p.odd_index >= 6)
        throw std::invalid_argument("odd_index out of range");
    return p;
}

json trial_to_json(const Trial& t) {
    return json{{"concept_id", t.concept_id},
                {"category", to_string(t.category)},
                {"target", t.target},
                {"choices", t.choices},
                {"correct_index", t.correct_index}};
}

Trial trial_from_json(const json& j) {
    Trial t;
    t.concept_id = j.at("concept_id").get<int>();
    t.category = category_from_string(j.at("category").get<std::string>());
    t.target = j.at("target").get<std::string>();
    const auto choices = j.at("choices").get<std::vector<std::string>>();
    if (choices.size() != 2)
        throw std::invalid_argument("trial must list exactly 2 choices");
    t.choices = {choices[0], choices[1]};
    t.correct_index = j.at("correct_index").get<int>();
    if (t.correct_index < 0 || t.correct_index > 1)
        throw std::invalid_argument("correct_index out of range");
    return t;
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ImageIoError("cannot open manifest: " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ImageIoError("cannot open file for writing: " + path.string());
    out << text;
    if (!out)
        throw ImageIoError("write failed: " + path.string());
}

// Loaders hand back absolute paths; savers relativize against the manifest
// directory. std::filesystem::absolute resolves against the process CWD
// without touching the filesystem, so both stay deterministic.
std::string resolve(const std::filesystem::path& base, const std::string& ref) {
    std::filesystem::path p(ref);
    if (!p.is_absolute())
        p = base / p;
    return std::filesystem::absolute(p).lexically_normal().generic_string();
}

std::string relativize(const std::filesystem::path& base, const std::string& ref) {
    const std::filesystem::path p(ref);
    if (!p.is_absolute())
        return ref; // relative refs are manifest-relative already
    const std::filesystem::path abs_base =
        std::filesystem::absolute(base).lexically_normal();
    const std::filesystem::path rel = p.lexically_normal().lexically_relative(abs_base);
    return rel.empty() ? ref : rel.generic_string();
}

} // namespace

std::filesystem::path write_problem(const SynthesizedProblem& sp,
                                    const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < 6; ++i)
        write_pgm(sp.images[i], dir / sp.problem.images[i]);
    const std::filesystem::path manifest = dir / "problem.json";
    save_problem_manifest(sp.problem, manifest);
    return manifest;
}

void save_problem_manifest(const Problem& problem, const std::filesystem::path& path) {
    const std::filesystem::path base = path.parent_path();
    Problem rel = problem;
    for (std::string& img : rel.images)
        img = relativize(base, img);
    write_text(path, problem_to_json(rel).dump(2) + "\n");
}

Problem load_problem_manifest(const std::filesystem::path& path) {
    Problem p = problem_from_json(load_json(path));
    const std::filesystem::path base = path.parent_path();
    for (std::string& img : p.images)
        img = resolve(base, img);
    return p;
}

void save_trials_manifest(const std::vector<Trial>& trials,
                          const std::filesystem::path& path) {
    const std::filesystem::path base = path.parent_path();
    json arr = json::array();
    for (const Trial& t : trials) {
        Trial rel = t;
        rel.target = relativize(base, rel.target);
        for (std::string& c : rel.choices)
            c = relativize(base, c);
        arr.push_back(trial_to_json(rel));
    }
    write_text(path, arr.dump(2) + "\n");
}

std::vector<Trial> load_trials_manifest(const std::filesystem::path& path) {
    const json arr = load_json(path);
    if (!arr.is_array())
        throw std::invalid_argument(path.string() + ": trial manifest must be a JSON array");
    const std::filesystem::path base = path.parent_path();
    std::vector<Trial> trials;
    trials.reserve(arr.size());
    for (const json& j : arr) {
        Trial t = trial_from_json(j);
        t.target = resolve(base, t.target);
        for (std::string& c : t.choices)
            c = resolve(base, c);
        trials.push_back(std::move(t));
    }
    return trials;
}

} // namespace geomint
