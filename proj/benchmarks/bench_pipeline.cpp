#include <benchmark/benchmark.h>

#include <sstream>

#include "geomint/eval.hpp"
#include "geomint/solver.hpp"
#include "geomint/trials.hpp"

using namespace geomint;

namespace {

SynthesizedProblem shared_problem(std::string_view id) {
    return synthesize_problem(id, GeneratorParams{}, 42);
}

std::string encode_pgm(const GrayImage& img) {
    std::string data = "P5\n" + std::to_string(img.width) + " " +
                       std::to_string(img.height) + "\n255\n";
    data.append(reinterpret_cast<const char*>(img.intensities.data()),
                img.intensities.size());
    return data;
}

void BM_decode_pgm(benchmark::State& state) {
    const std::string data = encode_pgm(shared_problem("closure").images[0]);
    for (auto _ : state) {
        std::istringstream in(data);
        benchmark::DoNotOptimize(decode_pnm(in));
    }
}
BENCHMARK(BM_decode_pgm);

void BM_principal_angle(benchmark::State& state) {
    const auto sp = shared_problem("rectangle");
    const PointSet points = extract_points(binarize(sp.images[0], default_threshold));
    for (auto _ : state)
        benchmark::DoNotOptimize(principal_angle(points));
}
BENCHMARK(BM_principal_angle);

void BM_extract_features(benchmark::State& state) {
    const auto sp = shared_problem("point_symmetry");
    const PointSet points = extract_points(binarize(sp.images[0], default_threshold));
    const AlignedFigure fig = align_figure(points, principal_angle(points), false);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_features(fig.points));
}
BENCHMARK(BM_extract_features);

void BM_solve_trial(benchmark::State& state) {
    const auto sp = shared_problem("chirality_z");
    const ModelConfig cfg = preset_config("four");
    const auto& odd = sp.images[static_cast<std::size_t>(sp.problem.odd_index)];
    const auto& target = sp.images[(sp.problem.odd_index + 1) % 6];
    const auto& choice = sp.images[(sp.problem.odd_index + 2) % 6];
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_trial(target, choice, odd, cfg));
}
BENCHMARK(BM_solve_trial);

void BM_synthesize_problem(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(synthesize_problem("center_of_circle", GeneratorParams{},
                                                    seed++));
}
BENCHMARK(BM_synthesize_problem);

void BM_generate_trials(benchmark::State& state) {
    const Problem problem = shared_problem("straight_line").problem;
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_trials(problem));
}
BENCHMARK(BM_generate_trials);

} // namespace

BENCHMARK_MAIN();
