#include "exclusion/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace exclusion {

namespace {

// The theta domain is open at pi/2; the grid endpoint sin(theta) = 1 is
// evaluated at this interior stand-in.
constexpr double kEndpointSin = 1.0 - 1e-9;
constexpr double kOnsetResolution = 1e-3;
constexpr double kMonotoneJitter = 1e-6;

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

SweepRow row_from_report(double sin_theta, const SolveReport& rep) {
    SweepRow row;
    row.sin_theta = sin_theta;
    row.sigma = rep.sigma;
    row.sigma_root = rep.sigma_root;
    row.dual = rep.dual_value;
    row.gap = rep.gap;
    row.iterations = rep.iterations;
    row.optimal = rep.optimality_ok;
    row.status = rep.status;
    return row;
}

}  // namespace

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("EXCLUSION_LAB_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

StateFamily family_at(const SweepSpec& spec, double sin_theta) {
    const double s = std::min(std::max(sin_theta, 0.0), kEndpointSin);
    StateFamily fam = build_family(std::asin(s), spec.n);
    if (spec.noise) {
        const NoiseChannel ch{spec.noise->kind, spec.noise->p, spec.noise->j,
                              spec.n, spec.noise->mode};
        fam = noisy_family(ch, fam);
    }
    return fam;
}

SolveReport solve_at(const SweepSpec& spec, double sin_theta) {
    return solve(family_at(spec, sin_theta), spec.solver);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.points < 2)
        throw Error("run_sweep: grid needs at least 2 points");
    const int points = spec.points;
    std::vector<SweepRow> rows(static_cast<std::size_t>(points));
    const int workers = std::min(resolve_threads(spec.threads), points);

    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next.fetch_add(1); i < points; i = next.fetch_add(1)) {
            const double s = static_cast<double>(i) / (points - 1);
            rows[static_cast<std::size_t>(i)] =
                row_from_report(s, solve_at(spec, s));
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    return rows;
}

OnsetResult find_onset(const SweepSpec& spec) {
    OnsetResult out;
    std::vector<std::pair<double, double>> seen;  // (sin_theta, sigma)
    auto sigma_at = [&](double s) {
        const SolveReport rep = solve_at(spec, s);
        out.evaluations.push_back(row_from_report(s, rep));
        seen.emplace_back(s, rep.sigma);
        return rep.sigma;
    };
    const double threshold = spec.solver.zero_threshold;

    double lo = 0.0;
    double hi = 1.0 - 1e-6;
    const double sigma_hi = sigma_at(hi);
    if (sigma_hi > threshold) {
        out.onset = std::nullopt;
    } else {
        // sigma(0) = 1 analytically, so the bracket [lo, hi] always starts
        // valid: above threshold on the left, at or below on the right.
        while (hi - lo > kOnsetResolution) {
            const double mid = 0.5 * (lo + hi);
            if (sigma_at(mid) <= threshold)
                hi = mid;
            else
                lo = mid;
        }
        out.onset = hi;
    }

    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
        if (seen[i].second > seen[i - 1].second + kMonotoneJitter) {
            out.monotone_ok = false;
            break;
        }
    }
    return out;
}

void emit_csv(const std::vector<SweepRow>& rows,
              const std::filesystem::path& path) {
    if (rows.empty()) throw Error("emit_csv: no rows");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("emit_csv: cannot open " + path.string());
    out << "sin_theta,sigma,sigma_root,dual,gap,iterations,optimal,status\n";
    for (const SweepRow& r : rows) {
        out << fmt12(r.sin_theta) << ',' << fmt12(r.sigma) << ','
            << fmt12(r.sigma_root) << ',' << fmt12(r.dual) << ','
            << fmt12(r.gap) << ',' << r.iterations << ','
            << (r.optimal ? 1 : 0) << ','
            << (r.status == SolveStatus::Converged ? "converged" : "max_iters")
            << '\n';
    }
    if (!out) throw IoError("emit_csv: write failed for " + path.string());
}

void emit_plotscript(const std::vector<std::pair<std::string, std::string>>&
                         csv_files_and_titles,
                     const std::filesystem::path& path) {
    if (csv_files_and_titles.empty())
        throw Error("emit_plotscript: no curves");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("emit_plotscript: cannot open " + path.string());
    out << "set datafile separator ','\n"
        << "set xlabel 'sin theta'\n"
        << "set ylabel 'sigma^{1/n}'\n"
        << "set xrange [0:1]\n"
        << "set yrange [0:1.05]\n"
        << "set key left bottom\n"
        << "plot \\\n";
    for (std::size_t i = 0; i < csv_files_and_titles.size(); ++i) {
        out << "  '" << csv_files_and_titles[i].first
            << "' using 1:3 with lines title '"
            << csv_files_and_titles[i].second << "'";
        out << (i + 1 < csv_files_and_titles.size() ? ", \\\n" : "\n");
    }
    if (!out)
        throw IoError("emit_plotscript: write failed for " + path.string());
}

std::optional<PresetName> parse_preset_name(const std::string& name) {
    if (name == "fig3") return PresetName::Fig3;
    if (name == "fig4a") return PresetName::Fig4a;
    if (name == "fig4b") return PresetName::Fig4b;
    if (name == "fig4c") return PresetName::Fig4c;
    if (name == "fig5") return PresetName::Fig5;
    if (name == "bounds_table") return PresetName::BoundsTable;
    return std::nullopt;
}

namespace {

std::string kind_letter(PauliKind k) {
    switch (k) {
        case PauliKind::X: return "x";
        case PauliKind::Y: return "y";
        case PauliKind::Z: return "z";
    }
    return "?";
}

SweepSpec noiseless_spec(const std::string& stem, int n) {
    SweepSpec s;
    s.n = n;
    s.label = stem + "_n" + std::to_string(n) + "_noiseless";
    return s;
}

SweepSpec collective_spec(const std::string& stem, int n, PauliKind kind,
                          int j, double p = 0.5) {
    SweepSpec s;
    s.n = n;
    s.noise = NoiseDesc{kind, p, j, NoiseMode::Collective};
    s.label = stem + "_n" + std::to_string(n) + "_";
    for (int i = 0; i < j; ++i) s.label += kind_letter(kind);
    return s;
}

PresetPlan multi_qubit_panel(const std::string& stem, int n) {
    PresetPlan plan;
    for (PauliKind kind : {PauliKind::X, PauliKind::Z, PauliKind::Y})
        for (int j = 2; j <= n; ++j)
            plan.sweeps.push_back(collective_spec(stem, n, kind, j));
    return plan;
}

}  // namespace

PresetPlan preset(PresetName name) {
    PresetPlan plan;
    switch (name) {
        case PresetName::Fig3:
            for (int n : {2, 3, 4}) {
                plan.sweeps.push_back(noiseless_spec("fig3", n));
                plan.sweeps.push_back(collective_spec("fig3", n, PauliKind::X, 1));
                plan.sweeps.push_back(collective_spec("fig3", n, PauliKind::Z, 1));
            }
            return plan;
        case PresetName::Fig4a:
            return multi_qubit_panel("fig4a", 2);
        case PresetName::Fig4b:
            return multi_qubit_panel("fig4b", 3);
        case PresetName::Fig4c:
            return multi_qubit_panel("fig4c", 4);
        case PresetName::Fig5:
            for (double p : {1.0, 0.98, 0.86, 0.7, 0.52}) {
                SweepSpec s;
                s.n = 3;
                s.noise = NoiseDesc{PauliKind::Z, p, 0, NoiseMode::Independent};
                char buf[16];
                std::snprintf(buf, sizeof buf, "%g", p);
                s.label = std::string("fig5_n3_indep_z_p") + buf;
                plan.sweeps.push_back(std::move(s));
            }
            return plan;
        case PresetName::BoundsTable:
            plan.bounds_table = true;
            return plan;
    }
    throw UnknownPreset("preset: unknown preset id");
}

}  // namespace exclusion
