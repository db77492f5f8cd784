// exclusion-lab: sweeps, zero-onset location, figure presets, the
// closed-form bound table, and optimality verification of stored POVMs.
//
// Exit codes: 0 success, 2 invalid specification or input, 3 when any sweep
// row hit the iteration cap (rows are still written).
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exclusion/bounds.hpp"
#include "exclusion/povm_io.hpp"
#include "exclusion/sweep.hpp"

namespace fs = std::filesystem;
using namespace exclusion;

namespace {

struct NoiseFlags {
    std::string noise;  // empty = noiseless
    double p = 0.5;
    int j = 1;
    std::string mode = "collective";
};

void add_noise_flags(CLI::App* cmd, NoiseFlags& nf) {
    cmd->add_option("--noise", nf.noise, "Pauli kind: x, y or z")
        ->check(CLI::IsMember({"x", "y", "z"}));
    cmd->add_option("--p", nf.p, "survival probability (noise does not act)")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--j", nf.j, "affected qubits (collective mode)");
    cmd->add_option("--mode", nf.mode, "collective or independent")
        ->check(CLI::IsMember({"collective", "independent"}));
}

std::optional<NoiseDesc> parse_noise(const NoiseFlags& nf, int n) {
    if (nf.noise.empty()) return std::nullopt;
    NoiseDesc d;
    d.kind = nf.noise == "x"   ? PauliKind::X
             : nf.noise == "y" ? PauliKind::Y
                               : PauliKind::Z;
    d.p = nf.p;
    d.j = nf.j;
    d.mode = nf.mode == "independent" ? NoiseMode::Independent
                                      : NoiseMode::Collective;
    if (d.mode == NoiseMode::Collective && (d.j < 0 || d.j > n))
        throw CLI::ValidationError("--j must lie in 0..n");
    return d;
}

std::string describe(const SweepSpec& spec) {
    std::string out = "n=" + std::to_string(spec.n);
    if (!spec.noise) return out + " noiseless";
    const NoiseDesc& d = *spec.noise;
    out += d.mode == NoiseMode::Independent ? " independent " : " collective ";
    out += d.kind == PauliKind::X ? "x" : d.kind == PauliKind::Y ? "y" : "z";
    if (d.mode == NoiseMode::Collective) out += " j=" + std::to_string(d.j);
    char buf[24];
    std::snprintf(buf, sizeof buf, " p=%g", d.p);
    return out + buf;
}

int write_sweep_outputs(const SweepSpec& spec, const fs::path& out_dir,
                        bool dump_povm) {
    fs::create_directories(out_dir);
    const auto rows = run_sweep(spec);
    const std::string stem = spec.label.empty() ? "sweep" : spec.label;
    emit_csv(rows, out_dir / (stem + ".csv"));
    emit_plotscript({{stem + ".csv", describe(spec)}},
                    out_dir / (stem + ".gp"));
    if (dump_povm) {
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            const double s = static_cast<double>(i) / (spec.points - 1);
            const SolveReport rep = solve_at(spec, s);
            write_povm_csv(rep.povm, out_dir / ("povm_row" +
                                                std::to_string(i) + ".csv"));
        }
    }
    int max_iter_rows = 0;
    for (const SweepRow& r : rows)
        if (r.status == SolveStatus::MaxIters) ++max_iter_rows;
    std::printf("%s: %zu rows -> %s\n", describe(spec).c_str(), rows.size(),
                (out_dir / (stem + ".csv")).string().c_str());
    if (max_iter_rows > 0) {
        std::fprintf(stderr, "warning: %d rows hit the iteration cap\n",
                     max_iter_rows);
        return 3;
    }
    return 0;
}

void write_bounds_table(std::ostream& os, int n_max) {
    os << "n,theta_min,d_n\n";
    char buf[96];
    for (int n = 1; n <= n_max; ++n) {
        const BoundTable row = bound_table_row(n);
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g\n", row.n,
                      row.theta_min, row.d_n);
        os << buf;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conclusive-exclusion sweeps over noisy n-qubit families"};
    app.require_subcommand(1);

    int n = 2;
    int points = 101;
    double threshold = 1e-6;
    std::string out_dir = ".";
    NoiseFlags nf;
    bool dump_povm = false;

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "solve over a sin(theta) grid, write CSV");
    sweep_cmd->add_option("--n", n, "qubit count")->check(CLI::Range(1, 6));
    sweep_cmd->add_option("--points", points, "grid size")
        ->check(CLI::Range(2, 100000));
    sweep_cmd->add_option("--threshold", threshold, "sigma-zero threshold");
    sweep_cmd->add_option("--out", out_dir, "output directory");
    sweep_cmd->add_flag("--dump-povm", dump_povm,
                        "also write povm_row<i>.csv per grid row");
    add_noise_flags(sweep_cmd, nf);

    CLI::App* onset_cmd = app.add_subcommand(
        "onset", "bisect for the smallest sin(theta) with sigma at zero");
    onset_cmd->add_option("--n", n, "qubit count")->check(CLI::Range(1, 6));
    onset_cmd->add_option("--threshold", threshold, "sigma-zero threshold");
    add_noise_flags(onset_cmd, nf);

    std::string preset_name;
    CLI::App* preset_cmd =
        app.add_subcommand("preset", "run a named figure-reproduction set");
    preset_cmd
        ->add_option("name", preset_name,
                     "fig3, fig4a, fig4b, fig4c, fig5 or bounds_table")
        ->required();
    preset_cmd->add_option("--points", points, "grid size per curve")
        ->check(CLI::Range(2, 100000));
    preset_cmd->add_option("--out", out_dir, "output directory");

    int n_max = 8;
    CLI::App* bounds_cmd = app.add_subcommand(
        "bounds", "print the closed-form onset table");
    bounds_cmd->add_option("--n-max", n_max, "largest n")
        ->check(CLI::Range(1, 64));

    std::string povm_path;
    double sin_theta = 0.0;
    double tol = 1e-6;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify-povm", "run the optimality criterion on a stored POVM");
    verify_cmd->add_option("file", povm_path, "POVM interchange CSV")
        ->required();
    verify_cmd->add_option("--n", n, "qubit count")->check(CLI::Range(1, 6));
    verify_cmd->add_option("--sin-theta", sin_theta, "family point")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    verify_cmd->add_option("--tol", tol, "criterion tolerance");
    add_noise_flags(verify_cmd, nf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep_cmd->parsed()) {
            SweepSpec spec;
            spec.n = n;
            spec.points = points;
            spec.solver.zero_threshold = threshold;
            spec.noise = parse_noise(nf, n);
            return write_sweep_outputs(spec, out_dir, dump_povm);
        }

        if (onset_cmd->parsed()) {
            SweepSpec spec;
            spec.n = n;
            spec.solver.zero_threshold = threshold;
            spec.noise = parse_noise(nf, n);
            const OnsetResult res = find_onset(spec);
            if (!res.monotone_ok)
                std::fprintf(stderr,
                             "warning: sigma not monotone along the grid\n");
            if (res.onset)
                std::printf("onset_sin=%.4f\n", *res.onset);
            else
                std::printf("onset_sin=none\n");
            return 0;
        }

        if (preset_cmd->parsed()) {
            const auto id = parse_preset_name(preset_name);
            if (!id) throw UnknownPreset("unknown preset: " + preset_name);
            const PresetPlan plan = preset(*id);
            fs::create_directories(out_dir);
            if (plan.bounds_table) {
                std::ofstream out(fs::path(out_dir) / "bounds.csv",
                                  std::ios::binary);
                if (!out) throw IoError("cannot open bounds.csv");
                write_bounds_table(out, 8);
                std::printf("bounds table -> %s/bounds.csv\n",
                            out_dir.c_str());
                return 0;
            }
            int rc = 0;
            std::vector<std::pair<std::string, std::string>> curves;
            for (SweepSpec spec : plan.sweeps) {
                spec.points = points;
                rc = std::max(rc, write_sweep_outputs(spec, out_dir, false));
                curves.emplace_back(spec.label + ".csv", describe(spec));
            }
            emit_plotscript(curves,
                            fs::path(out_dir) / (preset_name + ".gp"));
            return rc;
        }

        if (bounds_cmd->parsed()) {
            write_bounds_table(std::cout, n_max);
            return 0;
        }

        if (verify_cmd->parsed()) {
            const Povm m = read_povm_csv(povm_path);
            SweepSpec spec;
            spec.n = n;
            spec.noise = parse_noise(nf, n);
            const StateFamily fam = family_at(spec, sin_theta);
            const OptimalityCheck oc = check_optimality(fam, m, tol);
            const double sigma = sigma_value(m, fam);
            std::printf("sigma=%.12g\n", sigma);
            std::printf("dual_bound=%.12g\n", dual_bound(fam, m));
            std::printf("exclusion_probability=%.12g\n",
                        exclusion_probability(fam, m));
            std::printf("hermitian_ok=%d\npsd_ok=%d\noptimal=%s\n",
                        oc.hermitian_ok ? 1 : 0, oc.psd_ok ? 1 : 0,
                        oc.hermitian_ok && oc.psd_ok ? "yes" : "no");
            return 0;
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const CLI::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
