// Benchmark: serial reference scan loops vs the bitsliced OpenMP kernels,
// on synthetic random formulas. Verifies both produce identical bitmaps.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "occlogic/formula.hpp"
#include "occlogic/kernels.hpp"

namespace {

using occlogic::Exec;

occlogic::FormulaPtr random_core(std::mt19937& rng, int leaves, int num_vars) {
    if (leaves == 1) {
        occlogic::FormulaPtr f = occlogic::Formula::var(
            "v" + std::to_string(rng() % static_cast<unsigned>(num_vars)));
        if (rng() % 3 == 0) f = occlogic::Formula::negation(f);
        return f;
    }
    int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(leaves - 1));
    occlogic::FormulaPtr f = occlogic::Formula::conj(
        random_core(rng, left, num_vars),
        random_core(rng, leaves - left, num_vars));
    if (rng() % 4 == 0) f = occlogic::Formula::negation(f);
    return f;
}

std::vector<int> leaf_map(const occlogic::FormulaPtr& core) {
    std::vector<int> map;
    occlogic::for_each_occurrence(
        core, [&](const std::string& name, occlogic::Polarity) {
            map.push_back(std::stoi(name.substr(1)));
        });
    return map;
}

template <typename Fn>
double time_best_ms(int reps, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        if (ms < best) best = ms;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scan kernel benchmark: serial reference vs OpenMP bitsliced"};
    int bool_vars = 22;
    int lpm_vars = 13;
    int leaves = 48;
    int reps = 3;
    unsigned seed = 1;
    app.add_option("--bool-vars", bool_vars, "Variables for the Boolean scan");
    app.add_option("--lpm-vars", lpm_vars, "Variables for the 3-valued scan");
    app.add_option("--leaves", leaves, "Leaf count of the random formula");
    app.add_option("--reps", reps, "Repetitions (best time reported)");
    app.add_option("--seed", seed, "Random seed");
    CLI11_PARSE(app, argc, argv);

    std::mt19937 rng(seed);

    {
        occlogic::FormulaPtr f = random_core(rng, leaves, bool_vars);
        occlogic::EvalProgram p = occlogic::compile_core(f);
        std::vector<int> map = leaf_map(f);
        std::vector<std::uint64_t> serial, parallel;
        double ts = time_best_ms(reps, [&] {
            serial = occlogic::model_bitmap(p, map, bool_vars, Exec::Serial);
        });
        double tp = time_best_ms(reps, [&] {
            parallel =
                occlogic::model_bitmap(p, map, bool_vars, Exec::Parallel);
        });
        bool same = serial == parallel;
        std::printf(
            "boolean scan  %2d vars %3d leaves  serial %9.2f ms  "
            "parallel %9.2f ms  speedup %5.2fx  models %llu  %s\n",
            bool_vars, leaves, ts, tp, ts / tp,
            static_cast<unsigned long long>(occlogic::popcount(serial)),
            same ? "MATCH" : "MISMATCH");
        if (!same) return 1;
    }

    {
        occlogic::FormulaPtr f = random_core(rng, leaves, lpm_vars);
        occlogic::EvalProgram p = occlogic::compile_core(f);
        std::vector<int> map = leaf_map(f);
        std::vector<std::uint64_t> serial, parallel;
        double ts = time_best_ms(reps, [&] {
            serial =
                occlogic::lpm_model_bitmap(p, map, lpm_vars, Exec::Serial);
        });
        double tp = time_best_ms(reps, [&] {
            parallel =
                occlogic::lpm_model_bitmap(p, map, lpm_vars, Exec::Parallel);
        });
        bool same = serial == parallel;
        std::printf(
            "3-valued scan %2d vars %3d leaves  serial %9.2f ms  "
            "parallel %9.2f ms  speedup %5.2fx  models %llu  %s\n",
            lpm_vars, leaves, ts, tp, ts / tp,
            static_cast<unsigned long long>(occlogic::popcount(serial)),
            same ? "MATCH" : "MISMATCH");
        if (!same) return 1;
    }
    return 0;
}
