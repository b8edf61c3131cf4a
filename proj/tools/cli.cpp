#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geomint/eval.hpp"
#include "geomint/solver.hpp"
#include "geomint/trials.hpp"

namespace geomint::cli {

namespace {

using nlohmann::json;

struct SelectionFlags {
    std::string preset = "four";
    std::string list;
};

void add_selection_flags(CLI::App* cmd, SelectionFlags& flags) {
    auto* preset =
        cmd->add_option("--features", flags.preset,
                        "Feature preset: cs, cs+sspread, or four (default: four)")
            ->check(CLI::IsMember({"cs", "cs+sspread", "four"}));
    cmd->add_option("--features-list", flags.list,
                    "Explicit features, e.g. center_shift:base,spread:self")
        ->excludes(preset);
}

// Throws CLI::ValidationError (a parse error -> exit 2) on bad lists.
ModelConfig make_config(const SelectionFlags& flags, int threshold) {
    ModelConfig cfg;
    cfg.threshold = static_cast<std::uint8_t>(threshold);
    if (!flags.list.empty()) {
        const auto sel = parse_selection_list(flags.list);
        if (!sel)
            throw CLI::ValidationError("--features-list",
                                       "malformed feature list: " + flags.list);
        cfg.selection = *sel;
        cfg.preset_name = flags.list;
    } else {
        cfg.selection = preset_selection(flags.preset);
        cfg.preset_name = flags.preset;
    }
    return cfg;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ImageIoError("cannot open output file: " + out_path);
    out << text;
    if (!out)
        throw ImageIoError("write failed: " + out_path);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GEOMINT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("GEOMINT_SEED",
                                       "must be an unsigned integer, got: " + std::string(env));
        }
    }
    return 1;
}

std::string decision_json(const Decision& d) {
    const json j{{"chosen_index", d.chosen_index},
                 {"differences", d.differences},
                 {"orientation_flags", d.orientation_flags},
                 {"tie", d.tie}};
    return j.dump() + "\n";
}

std::string profiles_csv(const FeatureProfiles& fp) {
    std::string out = "feature,axis,bin,value\n";
    const auto emit = [&out](std::string_view feature, std::string_view axis,
                             const Profile& p) {
        for (int b = p.lo(); b <= p.hi(); ++b) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%s,%s,%d,%.10g\n", std::string(feature).c_str(),
                          std::string(axis).c_str(), b, p.at(b));
            out += buf;
        }
    };
    for (const BaseFeature f : all_base_features) {
        emit(to_string(f), "vertical", fp.base(f, Axis::vertical));
        emit(to_string(f), "horizontal", fp.base(f, Axis::horizontal));
    }
    for (const BaseFeature f : all_base_features)
        emit(to_string(f), "self", fp.self_profile(f));
    return out;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Symmetry-based solver and benchmark harness for 2-AFC "
                 "intuitive-geometry trials"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand(
        "solve", "Solve one trial: pick the choice more similar to the target");
    std::string target_path, choice_a_path, choice_b_path;
    solve_cmd->add_option("target", target_path, "Target image")->required();
    solve_cmd->add_option("choice_a", choice_a_path, "First choice image")->required();
    solve_cmd->add_option("choice_b", choice_b_path, "Second choice image")->required();
    SelectionFlags solve_sel;
    add_selection_flags(solve_cmd, solve_sel);
    int solve_threshold = default_threshold;
    solve_cmd->add_option("--threshold", solve_threshold, "Binarization level (default: 128)")
        ->check(CLI::Range(0, 255));

    // generate
    auto* generate_cmd =
        app.add_subcommand("generate", "Render a synthetic six-image problem");
    std::string concept_id_str;
    {
        std::vector<std::string> ids;
        for (const auto id : generator_ids())
            ids.emplace_back(id);
        generate_cmd->add_option("--concept", concept_id_str, "Concept generator id")
            ->required()
            ->check(CLI::IsMember(ids));
    }
    std::optional<std::uint64_t> seed_flag;
    generate_cmd->add_option("--seed", seed_flag,
                             "Generator seed (default: $GEOMINT_SEED, then 1)");
    std::string generate_out;
    generate_cmd->add_option("--out", generate_out, "Output directory")->required();
    GeneratorParams gen_params;
    generate_cmd->add_option("--canvas", gen_params.canvas_size, "Canvas size in px (default: 128)");
    generate_cmd->add_option("--stroke", gen_params.stroke_width, "Stroke width in px");
    generate_cmd->add_option("--pos-jitter", gen_params.position_jitter,
                             "Position jitter amplitude in px");
    generate_cmd->add_option("--scale-jitter", gen_params.scale_jitter,
                             "Relative size jitter amplitude");

    // trials
    auto* trials_cmd =
        app.add_subcommand("trials", "Expand a problem manifest into its 20 trials");
    std::string problem_path;
    trials_cmd->add_option("problem", problem_path, "Problem manifest (JSON)")->required();
    std::string trials_out = "trials.json";
    trials_cmd->add_option("--out", trials_out, "Trial manifest to write (default: trials.json)");

    // evaluate
    auto* evaluate_cmd =
        app.add_subcommand("evaluate", "Run the model over trial manifests and report accuracy");
    std::vector<std::string> trial_manifests;
    evaluate_cmd->add_option("trials", trial_manifests, "Trial manifests (JSON)")->required();
    SelectionFlags eval_sel;
    add_selection_flags(evaluate_cmd, eval_sel);
    int eval_threshold = default_threshold;
    evaluate_cmd->add_option("--threshold", eval_threshold, "Binarization level (default: 128)")
        ->check(CLI::Range(0, 255));
    std::string report_format = "table";
    evaluate_cmd->add_option("--report", report_format, "Report format (default: table)")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    std::string eval_out;
    evaluate_cmd->add_option("--out", eval_out, "Write the report here instead of stdout");
    int jobs = 1;
    evaluate_cmd->add_option("--jobs", jobs, "Worker threads (report is unaffected)")
        ->check(CLI::PositiveNumber);
    bool non_strict = false;
    evaluate_cmd->add_flag("--no-strict", non_strict,
                           "Record per-trial errors instead of aborting");
    bool with_reference = false;
    evaluate_cmd->add_flag("--with-reference", with_reference,
                           "Add bundled human-reference columns");
    bool compare_presets = false;
    evaluate_cmd->add_flag("--compare-presets", compare_presets,
                           "Run all three presets and print them beside the "
                           "bundled reference accuracies");

    // inspect
    auto* inspect_cmd =
        app.add_subcommand("inspect", "Dump an image's feature profiles as CSV");
    std::string inspect_path;
    inspect_cmd->add_option("image", inspect_path, "Image to inspect")->required();
    int inspect_threshold = default_threshold;
    inspect_cmd->add_option("--threshold", inspect_threshold, "Binarization level (default: 128)")
        ->check(CLI::Range(0, 255));
    std::string inspect_out;
    inspect_cmd->add_option("--out", inspect_out, "Write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    try {
        if (solve_cmd->parsed()) {
            ModelConfig cfg;
            try {
                cfg = make_config(solve_sel, solve_threshold);
            } catch (const CLI::ParseError& e) {
                std::cerr << e.what() << "\n\n" << app.help() << std::flush;
                return 2;
            }
            const Decision d = solve_trial(load_image(target_path), load_image(choice_a_path),
                                           load_image(choice_b_path), cfg);
            std::cout << decision_json(d);
        } else if (generate_cmd->parsed()) {
            std::uint64_t seed = 1;
            try {
                seed = seed_flag ? *seed_flag : default_seed();
            } catch (const CLI::ParseError& e) {
                std::cerr << e.what() << "\n\n" << app.help() << std::flush;
                return 2;
            }
            const SynthesizedProblem sp =
                synthesize_problem(concept_id_str, gen_params, seed);
            const std::filesystem::path manifest = write_problem(sp, generate_out);
            std::cout << manifest.generic_string() << "\n";
        } else if (trials_cmd->parsed()) {
            const Problem problem = load_problem_manifest(problem_path);
            save_trials_manifest(generate_trials(problem), trials_out);
            std::cout << trials_out << "\n";
        } else if (evaluate_cmd->parsed()) {
            ModelConfig cfg;
            try {
                cfg = make_config(eval_sel, eval_threshold);
            } catch (const CLI::ParseError& e) {
                std::cerr << e.what() << "\n\n" << app.help() << std::flush;
                return 2;
            }
            std::vector<Trial> trials;
            for (const std::string& manifest : trial_manifests) {
                auto batch = load_trials_manifest(manifest);
                trials.insert(trials.end(), std::make_move_iterator(batch.begin()),
                              std::make_move_iterator(batch.end()));
            }
            EvalOptions options;
            options.strict = !non_strict;
            options.jobs = jobs;
            options.with_reference = with_reference;
            if (compare_presets) {
                std::array<EvalReport, 3> reports;
                for (std::size_t p = 0; p < preset_names.size(); ++p) {
                    ModelConfig preset_cfg = preset_config(preset_names[p]);
                    preset_cfg.threshold = cfg.threshold;
                    reports[p] = evaluate(trials, preset_cfg, options);
                }
                write_output(render_preset_comparison(reports), eval_out);
            } else {
                const EvalReport report = evaluate(trials, cfg, options);
                ReportFormat format = ReportFormat::table;
                if (report_format == "csv")
                    format = ReportFormat::csv;
                else if (report_format == "json")
                    format = ReportFormat::json;
                write_output(render_report(report, format), eval_out);
            }
        } else if (inspect_cmd->parsed()) {
            const GrayImage img = load_image(inspect_path);
            const PointSet points =
                extract_points(binarize(img, static_cast<std::uint8_t>(inspect_threshold)));
            const AlignedFigure fig = align_figure(points, principal_angle(points), false);
            write_output(profiles_csv(extract_features(fig.points)), inspect_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace geomint::cli
