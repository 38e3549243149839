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

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bsfilter/filter.hpp"
#include "bsfilter/measures.hpp"
#include "bsfilter/states.hpp"

namespace bsf::cli {

enum class SweepAxis { kGamma, kTheta1, kTheta2, kEtaPath };

/// How the beam splitters move along an eta-path sweep. For the first three
/// the axis value x is eta^2 and each varied coefficient is sqrt(x); for
/// kConstrained the axis is the path parameter epsilon of solve_constraints.
enum class EtaPath { kUnison, kVaOnly, kVbOnly, kConstrained };

struct SweepSpec {
    FamilyParams family;
    SweepAxis axis = SweepAxis::kGamma;
    double lo = 0.0;
    double hi = 1.0;
    int points = 101;
    FilterSettings settings = FilterSettings::identity();  // used by the gamma/theta axes
    EtaPath path = EtaPath::kUnison;
};

struct SweepRow {
    double axis;
    FilterSettings settings;
    double probability;
    std::optional<MeasureReport> report;  // empty when the filtered ensemble vanished
};

inline constexpr const char *kSweepHeader =
    "axis,eta_va,eta_ha,eta_vb,eta_hb,probability,concurrence,eof,entropy_joint,entropy_a,entropy_b,"
    "linear_entropy,purity";

/// Throws ValidationError when the range, point count or family is unusable.
void validate(const SweepSpec &spec);
std::vector<SweepRow> run_sweep(const SweepSpec &spec);
void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows);

enum class BoundCurve { kWerner, kMems };

struct BoundRow {
    double gamma;
    double eof;
    double entropy_joint;
    double linear_entropy;
};

inline constexpr const char *kBoundHeader = "gamma,eof,entropy_joint,linear_entropy";

/// Werner states at theta = pi/4 over gamma in [1/3, 1], or the MEMS family over [0, 1].
std::vector<BoundRow> run_bounds(BoundCurve curve, int points);
void write_bounds_csv(std::ostream &out, const std::vector<BoundRow> &rows);

/// Values a preset may take from the command line.
struct PresetInputs {
    std::optional<double> gamma;
    std::optional<double> theta1;
    std::optional<double> theta2;
    std::optional<EtaPath> path;
};

/// Named sweep presets fig2..fig8. Parameters a preset leaves open must be
/// supplied in `inputs`; otherwise ValidationError names the missing flag.
SweepSpec preset_spec(const std::string &name, const PresetInputs &inputs);
std::vector<std::string> preset_names();

std::optional<SweepAxis> parse_axis(const std::string &text);
std::optional<EtaPath> parse_path(const std::string &text);
std::optional<Family> parse_family(const std::string &text);

}  // namespace bsf::cli
