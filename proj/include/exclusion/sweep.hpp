#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "exclusion/channels.hpp"
#include "exclusion/sdp.hpp"

namespace exclusion {

// Noise descriptor without the qubit count (taken from the sweep's n).
struct NoiseDesc {
    PauliKind kind = PauliKind::X;
    double p = 0.5;
    int j = 1;
    NoiseMode mode = NoiseMode::Collective;
};

struct SweepSpec {
    int n = 2;
    std::optional<NoiseDesc> noise;
    int points = 101;  // uniform grid over sin(theta) in [0,1]
    SolverConfig solver;
    std::string label;  // output file stem for presets
    int threads = 0;    // 0: EXCLUSION_LAB_THREADS, else hardware parallelism
};

struct SweepRow {
    double sin_theta = 0.0;
    double sigma = 0.0;
    double sigma_root = 0.0;
    double dual = 0.0;
    double gap = 0.0;
    int iterations = 0;
    bool optimal = false;
    SolveStatus status = SolveStatus::MaxIters;
};

// Family for the spec's n and noise at a given sin(theta); the open theta
// domain means the endpoint 1 is evaluated at its interior limit.
StateFamily family_at(const SweepSpec& spec, double sin_theta);

// One fresh solve per grid point, dispatched to a worker pool, rows ordered
// by grid index. Deterministic given the spec.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Full report for one grid point (the CLI uses this for POVM dumps).
SolveReport solve_at(const SweepSpec& spec, double sin_theta);

struct OnsetResult {
    // Smallest sin(theta) with sigma <= zero_threshold at 1e-3 resolution;
    // empty when sigma stays above threshold over the whole range.
    std::optional<double> onset;
    // False when the sigma values seen during bisection are not
    // nonincreasing within jitter tolerance.
    bool monotone_ok = true;
    // Every point evaluated during bisection, in evaluation order.
    std::vector<SweepRow> evaluations;
};

OnsetResult find_onset(const SweepSpec& spec);

// Header: sin_theta,sigma,sigma_root,dual,gap,iterations,optimal,status
// 12 significant digits, LF endings, UTF-8.
void emit_csv(const std::vector<SweepRow>& rows,
              const std::filesystem::path& path);

// Standalone gnuplot script plotting sigma_root against sin_theta for each
// (csv, title) pair; CSV paths are written as given (keep them relative).
void emit_plotscript(const std::vector<std::pair<std::string, std::string>>&
                         csv_files_and_titles,
                     const std::filesystem::path& path);

enum class PresetName { Fig3, Fig4a, Fig4b, Fig4c, Fig5, BoundsTable };

std::optional<PresetName> parse_preset_name(const std::string& name);

struct PresetPlan {
    std::vector<SweepSpec> sweeps;
    bool bounds_table = false;  // emit the closed-form onset table instead
};

PresetPlan preset(PresetName name);

// Worker-pool width: explicit value, else EXCLUSION_LAB_THREADS, else
// hardware concurrency.
int resolve_threads(int requested);

}  // namespace exclusion
