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

#include "cli/sweep.hpp"

#include <cmath>
#include <numbers>

#include "bsfilter/errors.hpp"
#include "cli/number_format.hpp"

namespace bsf::cli {

namespace {

double grid_point(const SweepSpec &spec, int i) {
    if (i == spec.points - 1) return spec.hi;
    return spec.lo + (spec.hi - spec.lo) * i / (spec.points - 1);
}

FilterSettings path_settings(const SweepSpec &spec, double x) {
    const double eta = std::sqrt(x);
    switch (spec.path) {
        case EtaPath::kUnison:
            return {eta, 1.0, eta, 1.0};
        case EtaPath::kVaOnly:
            return {eta, 1.0, 1.0, 1.0};
        case EtaPath::kVbOnly:
            return {1.0, 1.0, eta, 1.0};
        case EtaPath::kConstrained:
            return solve_constraints(spec.family, x);
    }
    throw ValidationError("unknown eta path");
}

void require_range(const SweepSpec &spec, double lo, double hi, bool open_lo, const char *what) {
    const bool lo_ok = open_lo ? spec.lo > lo : spec.lo >= lo;
    if (!lo_ok || spec.hi > hi) {
        throw ValidationError(std::string(what) + " range must lie in " + (open_lo ? "(" : "[") + format_number(lo) +
                              ", " + format_number(hi) + "]");
    }
}

void write_field(std::ostream &out, double v) { out << ',' << format_number(v); }

}  // namespace

void validate(const SweepSpec &spec) {
    if (spec.points < 2) throw ValidationError("points must be at least 2");
    if (!(spec.lo < spec.hi)) throw ValidationError("sweep range needs lo < hi");
    switch (spec.axis) {
        case SweepAxis::kGamma:
            require_range(spec, 0.0, 1.0, false, "gamma");
            break;
        case SweepAxis::kTheta1:
        case SweepAxis::kTheta2:
            require_range(spec, 0.0, std::numbers::pi / 2, false, "theta");
            break;
        case SweepAxis::kEtaPath:
            require_range(spec, 0.0, 1.0, spec.path == EtaPath::kConstrained, "eta path");
            break;
    }
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
    validate(spec);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.points));
    for (int i = 0; i < spec.points; ++i) {
        const double x = grid_point(spec, i);
        FamilyParams params = spec.family;
        FilterSettings settings = spec.settings;
        switch (spec.axis) {
            case SweepAxis::kGamma:
                params.gamma = x;
                break;
            case SweepAxis::kTheta1:
                params.theta1 = x;
                break;
            case SweepAxis::kTheta2:
                params.theta2 = x;
                break;
            case SweepAxis::kEtaPath:
                settings = path_settings(spec, x);
                break;
        }
        const DensityMatrix4 rho = make_state(params);
        const double p = filter_unnormalized(rho, settings).trace().real();
        SweepRow row{x, settings, p, std::nullopt};
        try {
            const FilterOutcome out = apply_filter(rho, settings);
            row.probability = out.probability;
            row.report = report(out.state);
        } catch (const VanishingEnsemble &) {
        }
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << kSweepHeader << '\n';
    for (const SweepRow &r : rows) {
        out << format_number(r.axis);
        for (double eta : r.settings.as_array()) write_field(out, eta);
        write_field(out, r.probability);
        if (r.report) {
            const MeasureReport &m = *r.report;
            for (double v : {m.concurrence, m.eof, m.entropy_joint, m.entropy_a, m.entropy_b, m.linear_entropy, m.purity})
                write_field(out, v);
        } else {
            out << ",,,,,,,";
        }
        out << '\n';
    }
}

std::vector<BoundRow> run_bounds(BoundCurve curve, int points) {
    if (points < 2) throw ValidationError("points must be at least 2");
    const double lo = curve == BoundCurve::kWerner ? 1.0 / 3.0 : 0.0;
    std::vector<BoundRow> rows;
    for (int i = 0; i < points; ++i) {
        const double g = i == points - 1 ? 1.0 : lo + (1.0 - lo) * i / (points - 1);
        const DensityMatrix4 rho = curve == BoundCurve::kWerner ? werner(g, std::numbers::pi / 4) : mems_bound_state(g);
        rows.push_back({g, eof(rho), von_neumann_joint(rho), linear_entropy(rho)});
    }
    return rows;
}

void write_bounds_csv(std::ostream &out, const std::vector<BoundRow> &rows) {
    out << kBoundHeader << '\n';
    for (const BoundRow &r : rows) {
        out << format_number(r.gamma);
        write_field(out, r.eof);
        write_field(out, r.entropy_joint);
        write_field(out, r.linear_entropy);
        out << '\n';
    }
}

namespace {

double need(const std::optional<double> &v, const std::string &preset, const char *flag) {
    if (!v) throw ValidationError("preset " + preset + " requires " + flag);
    return *v;
}

}  // namespace

SweepSpec preset_spec(const std::string &name, const PresetInputs &in) {
    constexpr double kQuarter = std::numbers::pi / 4;
    SweepSpec s;
    s.points = 101;
    if (name == "fig2") {
        // Mixing sweep between a maximal |VH>+|HV> component (gamma = 0) and a non-maximal one.
        s.family.family = Family::kTwoBellMixture;
        s.family.theta2 = kQuarter;
        s.family.theta1 = need(in.theta1, name, "--theta1");
        s.axis = SweepAxis::kGamma;
    } else if (name == "fig3") {
        s.family.family = Family::kTwoBellMixture;
        s.family.gamma = need(in.gamma, name, "--gamma");
        s.family.theta2 = need(in.theta2, name, "--theta2");
        s.axis = SweepAxis::kTheta1;
        s.hi = std::numbers::pi / 2;
    } else if (name == "fig4") {
        s.family.family = Family::kTwoBellMixture;
        s.family.theta1 = kQuarter;
        s.family.gamma = need(in.gamma, name, "--gamma");
        s.family.theta2 = need(in.theta2, name, "--theta2");
        s.axis = SweepAxis::kEtaPath;
    } else if (name == "fig5" || name == "fig6") {
        s.family.family = Family::kWerner;
        s.family.theta1 = std::atan(0.6);
        s.family.gamma = need(in.gamma, name, "--gamma");
        s.axis = SweepAxis::kEtaPath;
        if (name == "fig6") {
            if (!in.path) throw ValidationError("preset fig6 requires --path");
            s.path = *in.path;
        }
    } else if (name == "fig7") {
        s.family.family = Family::kEntSep;
        s.family.gamma = 0.3;
        s.family.theta2 = need(in.theta2, name, "--theta2");
        s.axis = SweepAxis::kEtaPath;
    } else if (name == "fig8") {
        s.family.family = Family::kEntSep;
        s.family.gamma = need(in.gamma, name, "--gamma");
        s.family.theta2 = need(in.theta2, name, "--theta2");
        s.axis = SweepAxis::kEtaPath;
        s.path = EtaPath::kConstrained;
        s.lo = 1e-3;
    } else {
        throw ValidationError("unknown preset '" + name + "'");
    }
    if (name != "fig6" && in.path) s.path = *in.path;
    return s;
}

std::vector<std::string> preset_names() { return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"}; }

std::optional<SweepAxis> parse_axis(const std::string &t) {
    if (t == "gamma") return SweepAxis::kGamma;
    if (t == "theta1") return SweepAxis::kTheta1;
    if (t == "theta2") return SweepAxis::kTheta2;
    if (t == "eta-path") return SweepAxis::kEtaPath;
    return std::nullopt;
}

std::optional<EtaPath> parse_path(const std::string &t) {
    if (t == "unison") return EtaPath::kUnison;
    if (t == "va") return EtaPath::kVaOnly;
    if (t == "vb") return EtaPath::kVbOnly;
    if (t == "constrained") return EtaPath::kConstrained;
    return std::nullopt;
}

std::optional<Family> parse_family(const std::string &t) {
    for (Family f : {Family::kBellPhi, Family::kBellPsi, Family::kTwoBellMixture, Family::kWerner, Family::kEntSep,
                     Family::kMemsBound}) {
        if (t == family_name(f)) return f;
    }
    return std::nullopt;
}

}  // namespace bsf::cli
