// Copyright 2026 The bsfilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/app.hpp"

#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bsfilter/errors.hpp"
#include "bsfilter/measures.hpp"
#include "bsfilter/mode_expansion.hpp"
#include "bsfilter/optimize.hpp"
#include "cli/matrix_file.hpp"
#include "cli/number_format.hpp"
#include "cli/sweep.hpp"

namespace bsf::cli {

namespace {

struct StateFlags {
    std::string family;
    std::optional<double> gamma, theta, theta_deg, theta1, theta2;
    std::string sign = "+";
    std::string matrix_file;
    std::optional<std::uint64_t> seed;
    int rank = 4;
};

struct SettingsFlags {
    double va = 1.0, ha = 1.0, vb = 1.0, hb = 1.0;
    bool solve = false;
    std::optional<double> epsilon;
};

void add_family_flags(CLI::App *cmd, StateFlags &f) {
    cmd->add_option("--family", f.family, "bell-phi|bell-psi|two-bell|werner|ent-sep|mems");
    cmd->add_option("--gamma", f.gamma, "mixing weight in [0, 1]");
    auto *theta = cmd->add_option("--theta", f.theta, "family angle in radians");
    cmd->add_option("--theta-deg", f.theta_deg, "family angle in degrees")->excludes(theta);
    cmd->add_option("--theta1", f.theta1, "angle of the |VV>,|HH> component (radians)");
    cmd->add_option("--theta2", f.theta2, "angle of the |VH>,|HV> component (radians)");
    cmd->add_option("--sign", f.sign, "relative sign of pure Bell families")->check(CLI::IsMember({"+", "-"}));
}

void add_state_flags(CLI::App *cmd, StateFlags &f) {
    add_family_flags(cmd, f);
    cmd->add_option("--matrix-file", f.matrix_file, "4x4 density matrix, entries re+imj");
    cmd->add_option("--seed", f.seed, "draw a random state with this seed");
    cmd->add_option("--rank", f.rank, "rank of the random state")->check(CLI::Range(1, 4));
}

void add_settings_flags(CLI::App *cmd, SettingsFlags &s) {
    cmd->add_option("--eta-va", s.va, "transmission of the V mode at A");
    cmd->add_option("--eta-ha", s.ha, "transmission of the H mode at A");
    cmd->add_option("--eta-vb", s.vb, "transmission of the V mode at B");
    cmd->add_option("--eta-hb", s.hb, "transmission of the H mode at B");
    cmd->add_flag("--solve", s.solve, "use the family's closed-form constraint settings");
    cmd->add_option("--epsilon", s.epsilon, "path parameter for families with a limit constraint");
}

FamilyParams family_params(const StateFlags &f) {
    const auto fam = parse_family(f.family);
    if (!fam) throw ValidationError("unknown family '" + f.family + "'");
    FamilyParams p;
    p.family = *fam;
    if (f.gamma) p.gamma = *f.gamma;
    p.sign = f.sign == "-" ? Sign::kMinus : Sign::kPlus;
    std::optional<double> theta = f.theta;
    if (f.theta_deg) theta = *f.theta_deg * std::numbers::pi / 180.0;
    if (theta) {
        const bool first = p.family == Family::kBellPhi || p.family == Family::kWerner ||
                           p.family == Family::kTwoBellMixture;
        const bool second = p.family == Family::kBellPsi || p.family == Family::kEntSep ||
                            p.family == Family::kTwoBellMixture;
        if (first) p.theta1 = *theta;
        if (second) p.theta2 = *theta;
    }
    if (f.theta1) p.theta1 = *f.theta1;
    if (f.theta2) p.theta2 = *f.theta2;
    return p;
}

DensityMatrix4 resolve_state(const StateFlags &f) {
    const int sources = !f.family.empty() + !f.matrix_file.empty() + f.seed.has_value();
    if (sources != 1) throw ValidationError("give exactly one of --family, --matrix-file, --seed");
    if (!f.matrix_file.empty()) return DensityMatrix4::from_matrix(read_matrix_file(f.matrix_file));
    if (f.seed) return random_density(*f.seed, f.rank);
    const FamilyParams p = family_params(f);
    // Pure families accept their defining angle through --theta; validate it here.
    return make_state(p);
}

FilterSettings resolve_settings(const SettingsFlags &s, const StateFlags &f) {
    if (!s.solve) return {s.va, s.ha, s.vb, s.hb};
    if (f.family.empty()) throw ValidationError("--solve needs --family");
    return solve_constraints(family_params(f), s.epsilon);
}

void print_value(std::ostream &out, const char *key, double v) { out << key << ": " << format_number(v) << '\n'; }

void print_settings(std::ostream &out, const FilterSettings &s) {
    print_value(out, "eta_va", s.va());
    print_value(out, "eta_ha", s.ha());
    print_value(out, "eta_vb", s.vb());
    print_value(out, "eta_hb", s.hb());
}

void print_report(std::ostream &out, const MeasureReport &r) {
    print_value(out, "concurrence", r.concurrence);
    print_value(out, "eof", r.eof);
    print_value(out, "entropy_joint", r.entropy_joint);
    print_value(out, "entropy_a", r.entropy_a);
    print_value(out, "entropy_b", r.entropy_b);
    print_value(out, "linear_entropy", r.linear_entropy);
    print_value(out, "purity", r.purity);
}

/// Runs `body` with either the file at `path` or `fallback` as its stream.
void with_output(const std::string &path, std::ostream &fallback, const std::function<void(std::ostream &)> &body) {
    if (path.empty()) {
        body(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ValidationError("cannot open output file '" + path + "'");
    body(file);
}

int guarded(std::ostream &err, const std::function<void()> &body) {
    try {
        body();
        return kExitOk;
    } catch (const VanishingEnsemble &e) {
        err << "error: " << e.what() << '\n';
        return kExitVanishing;
    } catch (const NoFeasiblePoint &e) {
        err << "error: " << e.what() << '\n';
        return kExitNoFeasiblePoint;
    } catch (const ConvergenceFailure &e) {
        err << "error: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Local filtering of two-photon polarization states with variable beam splitters", "bsfilter"};
    app.require_subcommand(1);

    StateFlags state;
    SettingsFlags settings;

    auto *measures_cmd = app.add_subcommand("measures", "print entanglement and entropy measures of a state");
    add_state_flags(measures_cmd, state);

    bool oracle = false;
    std::string out_path;
    auto *filter_cmd = app.add_subcommand("filter", "apply the beam splitter filter and report the outcome");
    add_state_flags(filter_cmd, state);
    add_settings_flags(filter_cmd, settings);
    filter_cmd->add_flag("--oracle", oracle, "also run the photonic mode expansion and compare");
    filter_cmd->add_option("--out", out_path, "write the filtered density matrix here");

    std::string preset, axis_text = "gamma", path_text;
    std::optional<double> lo, hi;
    int points = 101;
    auto *sweep_cmd = app.add_subcommand("sweep", "tabulate measures along a parameter or beam splitter path");
    add_family_flags(sweep_cmd, state);
    add_settings_flags(sweep_cmd, settings);
    sweep_cmd->add_option("--preset", preset, "named sweep preset fig2..fig8");
    sweep_cmd->add_option("--axis", axis_text, "gamma|theta1|theta2|eta-path");
    sweep_cmd->add_option("--path", path_text, "unison|va|vb|constrained (eta-path axis)");
    sweep_cmd->add_option("--lo", lo, "first axis value");
    sweep_cmd->add_option("--hi", hi, "last axis value");
    sweep_cmd->add_option("--points", points, "number of rows")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", out_path, "CSV destination (default stdout)");

    std::string curve_text;
    auto *bounds_cmd = app.add_subcommand("bounds", "tabulate the Werner or MEMS bound curve");
    bounds_cmd->add_option("--curve", curve_text, "werner|mems")->required()->check(CLI::IsMember({"werner", "mems"}));
    bounds_cmd->add_option("--points", points, "number of rows")->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--out", out_path, "CSV destination (default stdout)");

    OptimizeConfig cfg;
    bool constrained = false;
    std::string trace_path;
    auto *optimize_cmd = app.add_subcommand("optimize", "search for settings maximizing the filtered EOF");
    add_state_flags(optimize_cmd, state);
    optimize_cmd->add_flag("--constrained", constrained, "require maximal subsystem entropies");
    optimize_cmd->add_option("--grid", cfg.grid_resolution, "grid points per axis (>= 8)");
    optimize_cmd->add_option("--rounds", cfg.refine_rounds, "refinement rounds (>= 1)");
    optimize_cmd->add_option("--entropy-tol", cfg.entropy_tolerance, "subsystem entropy slack");
    optimize_cmd->add_option("--min-probability", cfg.min_probability, "reject candidates below this probability");
    optimize_cmd->add_option("--trace", trace_path, "CSV of every evaluated candidate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    if (*measures_cmd) {
        return guarded(err, [&] { print_report(out, report(resolve_state(state))); });
    }
    if (*filter_cmd) {
        return guarded(err, [&] {
            const DensityMatrix4 rho = resolve_state(state);
            const FilterSettings s = resolve_settings(settings, state);
            const FilterOutcome result = apply_filter(rho, s);
            print_settings(out, s);
            print_value(out, "probability", result.probability);
            print_report(out, report(result.state));
            if (oracle) {
                const FilterOutcome mode = mode_level_filter(rho, s);
                print_value(out, "oracle_trace_distance", trace_distance(mode.state, result.state));
                print_value(out, "oracle_probability_difference", std::abs(mode.probability - result.probability));
            }
            if (!out_path.empty()) {
                with_output(out_path, out, [&](std::ostream &o) { o << format_matrix(result.state.matrix()); });
            }
        });
    }
    if (*sweep_cmd) {
        return guarded(err, [&] {
            SweepSpec spec;
            std::optional<EtaPath> path;
            if (!path_text.empty()) {
                path = parse_path(path_text);
                if (!path) throw ValidationError("unknown path '" + path_text + "'");
            }
            if (!preset.empty()) {
                PresetInputs in;
                std::optional<double> theta = state.theta;
                if (state.theta_deg) theta = *state.theta_deg * std::numbers::pi / 180.0;
                in.gamma = state.gamma;
                in.theta1 = state.theta1 ? state.theta1 : theta;
                in.theta2 = state.theta2 ? state.theta2 : theta;
                in.path = path;
                spec = preset_spec(preset, in);
            } else {
                if (state.family.empty()) throw ValidationError("sweep needs --family or --preset");
                spec.family = family_params(state);
                const auto axis = parse_axis(axis_text);
                if (!axis) throw ValidationError("unknown axis '" + axis_text + "'");
                spec.axis = *axis;
                if (spec.axis == SweepAxis::kTheta1 || spec.axis == SweepAxis::kTheta2) spec.hi = std::numbers::pi / 2;
                if (path) spec.path = *path;
                if (spec.axis == SweepAxis::kEtaPath && spec.path == EtaPath::kConstrained) spec.lo = 1e-3;
                spec.settings = FilterSettings(settings.va, settings.ha, settings.vb, settings.hb);
            }
            if (sweep_cmd->count("--points")) spec.points = points;
            if (lo) spec.lo = *lo;
            if (hi) spec.hi = *hi;
            const auto rows = run_sweep(spec);
            with_output(out_path, out, [&](std::ostream &o) { write_sweep_csv(o, rows); });
        });
    }
    if (*bounds_cmd) {
        return guarded(err, [&] {
            const auto rows = run_bounds(curve_text == "werner" ? BoundCurve::kWerner : BoundCurve::kMems, points);
            with_output(out_path, out, [&](std::ostream &o) { write_bounds_csv(o, rows); });
        });
    }
    if (*optimize_cmd) {
        return guarded(err, [&] {
            cfg.mode = constrained ? OptimizeMode::kSubsystemConstrained : OptimizeMode::kUnconstrainedEof;
            const DensityMatrix4 rho = resolve_state(state);
            std::ofstream trace;
            CandidateObserver observer;
            if (!trace_path.empty()) {
                trace.open(trace_path, std::ios::binary);
                if (!trace) throw ValidationError("cannot open trace file '" + trace_path + "'");
                trace << "eta_va,eta_ha,eta_vb,eta_hb,probability,eof,max_entropy_residual,feasible\n";
                observer = [&trace](const FilterSettings &s, const std::optional<CandidateScore> &score) {
                    for (double eta : s.as_array()) trace << format_number(eta) << ',';
                    if (score) {
                        trace << format_number(score->probability) << ',' << format_number(score->eof) << ','
                              << format_number(score->max_entropy_residual) << ',' << (score->feasible ? 1 : 0);
                    } else {
                        trace << ",,,";
                    }
                    trace << '\n';
                };
            }
            const OptimizeResult r = optimize_eof(rho, cfg, observer);
            print_settings(out, r.settings);
            print_value(out, "probability", r.outcome.probability);
            print_report(out, r.report);
            print_value(out, "residual_entropy_a", r.constraint_residuals[0]);
            print_value(out, "residual_entropy_b", r.constraint_residuals[1]);
            out << "evaluations: " << r.evaluations << '\n';
        });
    }
    return kExitValidation;
}

}  // namespace bsf::cli
