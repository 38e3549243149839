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

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "bsfilter/filter.hpp"
#include "bsfilter/measures.hpp"

namespace bsf {

enum class OptimizeMode { kUnconstrainedEof, kSubsystemConstrained };

struct OptimizeConfig {
    OptimizeMode mode = OptimizeMode::kUnconstrainedEof;
    int grid_resolution = 8;  // points per axis on [0, 1], >= 8
    int refine_rounds = 3;    // >= 1
    double entropy_tolerance = 1e-6;
    double eof_tie_tolerance = 1e-9;
    double min_probability = 0.0;
};

/// Throws ParamOutOfRange on an invalid configuration.
void validate(const OptimizeConfig &cfg);

/// One evaluated candidate, as seen by a trace observer.
struct CandidateScore {
    FilterSettings settings;
    double probability;
    double eof;
    double max_entropy_residual;  // max(|S_A - 1|, |S_B - 1|)
    bool feasible;
};

struct OptimizeResult {
    FilterSettings settings;
    FilterOutcome outcome;
    MeasureReport report;
    std::array<double, 2> constraint_residuals;  // |S_A - 1|, |S_B - 1|
    std::vector<double> best_eof_by_round;       // after the grid, then after each refine round
    std::size_t evaluations = 0;
};

/// Receives every candidate in evaluation order; candidates whose filtered
/// ensemble vanished are reported with an empty score.
using CandidateObserver = std::function<void(const FilterSettings &, const std::optional<CandidateScore> &)>;

/// Ratios that balance the diagonal marginals of the filtered state
/// (equal V/H weight on each side), computed by alternating per-arm scaling.
/// Each arm is returned with its larger coefficient at 1. Returns nullopt when
/// a marginal cannot be balanced at any finite non-zero ratio.
std::optional<FilterSettings> balance_marginals(const DensityMatrix4 &rho, const FilterSettings &start);

/// Deterministic search for the settings maximizing post-filter EOF.
///
/// A full grid over [0, 1]^4 is followed by refine_rounds passes of
/// golden-section line searches, both along single coefficients and along
/// pairs moved in unison. Ties within eof_tie_tolerance go to the higher
/// success probability, then to the lexicographically larger settings.
/// In kSubsystemConstrained mode each candidate is first mapped through
/// balance_marginals and rejected unless max(|S_A-1|, |S_B-1|) <= entropy_tolerance.
///
/// Throws NoFeasiblePoint when no candidate survives.
OptimizeResult optimize_eof(const DensityMatrix4 &rho, const OptimizeConfig &cfg,
                            const CandidateObserver &observer = {});

}  // namespace bsf
