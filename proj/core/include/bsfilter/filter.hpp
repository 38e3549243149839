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
#include <optional>

#include "bsfilter/qlinalg.hpp"
#include "bsfilter/states.hpp"

namespace bsf {

/// Amplitude transmission coefficients of the four variable beam splitters.
/// Each lies in [0, 1]; the constructor throws ParamOutOfRange otherwise.
class FilterSettings {
   public:
    FilterSettings(double eta_va, double eta_ha, double eta_vb, double eta_hb);

    static FilterSettings identity() { return {1.0, 1.0, 1.0, 1.0}; }
    static FilterSettings from_array(const std::array<double, 4> &etas) {
        return {etas[0], etas[1], etas[2], etas[3]};
    }

    double va() const { return etas_[0]; }
    double ha() const { return etas_[1]; }
    double vb() const { return etas_[2]; }
    double hb() const { return etas_[3]; }
    /// (va, ha, vb, hb)
    const std::array<double, 4> &as_array() const { return etas_; }

    /// eta_va * eta_ha * eta_vb * eta_hb
    double product() const { return etas_[0] * etas_[1] * etas_[2] * etas_[3]; }

    friend bool operator==(const FilterSettings &, const FilterSettings &) = default;

   private:
    std::array<double, 4> etas_;
};

/// Post-selected state and the probability of the coincidence event.
struct FilterOutcome {
    DensityMatrix4 state;
    double probability;
};

inline constexpr double kVanishingProbability = 1e-12;

/// Effective local filter A (x) B = diag(va*vb, va*hb, ha*vb, ha*hb).
Mat4 filter_operator(const FilterSettings &s);

/// (A(x)B) rho (A(x)B)^dagger before normalization; its trace is the success probability.
Mat4 filter_unnormalized(const DensityMatrix4 &rho, const FilterSettings &s);

/// Normalized coincidence-basis output. Throws VanishingEnsemble when P <= 1e-12.
FilterOutcome apply_filter(const DensityMatrix4 &rho, const FilterSettings &s);

/// Largest eigenvalue of (A(x)B)^dagger (A(x)B); never exceeds 1 for valid settings.
double kraus_completion_check(const FilterSettings &s);

/// Canonical settings meeting the maximal-subsystem-entropy conditions of a state family.
///
/// All constraints fix only the per-arm ratios va/ha and vb/hb; each arm is then
/// scaled so that its larger coefficient is 1, which maximizes the success
/// probability for those ratios.
///
///   BellPhi         (va vb)/(ha hb) = tan(theta1), split evenly between the arms
///   BellPsi         (va hb)/(ha vb) = tan(theta2), split evenly between the arms
///   TwoBellMixture  both of the above at once (unique ratios)
///   Werner          va/ha = vb/hb = r with r^4 = (e + gamma sin^2)/(e + gamma cos^2),
///                   e = (1 - gamma)/4; equals tan(theta1) = r^2 when gamma = 1
///   EntSep          vb = epsilon, va = epsilon tan(theta2) (requires path_epsilon)
///   MemsBound       va = vb = epsilon (requires path_epsilon)
///
/// Throws NoSolution when a ratio degenerates to 0 or infinity (product input
/// states), ParamOutOfRange for invalid parameters or a missing/invalid epsilon.
FilterSettings solve_constraints(const FamilyParams &family, std::optional<double> path_epsilon = std::nullopt);

}  // namespace bsf
