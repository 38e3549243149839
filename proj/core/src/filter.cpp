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

#include "bsfilter/filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bsfilter/errors.hpp"

namespace bsf {

namespace {

// Per-arm ratio (V over H) to the pair (eta_v, eta_h) whose larger entry is 1.
std::array<double, 2> arm_from_ratio(double ratio, const char *arm) {
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw NoSolution(std::string("constraint forces arm ") + arm + " ratio eta_V/eta_H to " +
                         error_number(ratio) + "; no settings with all eta in (0, 1]");
    }
    if (ratio <= 1.0) return {ratio, 1.0};
    return {1.0, 1.0 / ratio};
}

FilterSettings from_ratios(double ratio_a, double ratio_b) {
    const auto a = arm_from_ratio(ratio_a, "A");
    const auto b = arm_from_ratio(ratio_b, "B");
    return {a[0], a[1], b[0], b[1]};
}

double checked_tan(double theta, const char *name) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + 1e-12)) {
        throw ParamOutOfRange(std::string(name) + " must lie in [0, pi/2], got " + error_number(theta));
    }
    // Angles within the input slack of 0 or pi/2 describe product states.
    const double c = std::cos(theta), s = std::sin(theta);
    if (c <= 1e-12) return std::numeric_limits<double>::infinity();
    if (s <= 1e-12) return 0.0;
    return s / c;
}

double checked_epsilon(std::optional<double> eps, Family family) {
    if (!eps.has_value()) {
        throw ParamOutOfRange(std::string("family ") + family_name(family) +
                              " has a limit constraint; a path parameter epsilon in (0, 1] is required");
    }
    if (!(*eps > 0.0 && *eps <= 1.0)) {
        throw ParamOutOfRange("path parameter epsilon must lie in (0, 1], got " + error_number(*eps));
    }
    return *eps;
}

}  // namespace

FilterSettings::FilterSettings(double eta_va, double eta_ha, double eta_vb, double eta_hb)
    : etas_{eta_va, eta_ha, eta_vb, eta_hb} {
    static constexpr const char *kNames[] = {"eta_va", "eta_ha", "eta_vb", "eta_hb"};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(etas_[i] >= 0.0 && etas_[i] <= 1.0)) {
            throw ParamOutOfRange(std::string(kNames[i]) + " must lie in [0, 1], got " + error_number(etas_[i]));
        }
    }
}

Mat4 filter_operator(const FilterSettings &s) {
    return Mat4::diagonal({s.va() * s.vb(), s.va() * s.hb(), s.ha() * s.vb(), s.ha() * s.hb()});
}

Mat4 filter_unnormalized(const DensityMatrix4 &rho, const FilterSettings &s) {
    const std::array<double, 4> f = {s.va() * s.vb(), s.va() * s.hb(), s.ha() * s.vb(), s.ha() * s.hb()};
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = (f[i] * f[j]) * rho(i, j);
    }
    return out;
}

FilterOutcome apply_filter(const DensityMatrix4 &rho, const FilterSettings &s) {
    Mat4 m = filter_unnormalized(rho, s);
    const double p = m.trace().real();
    if (!(p > kVanishingProbability)) {
        throw VanishingEnsemble("post-selection probability " + error_number(p) + " is below 1e-12");
    }
    m *= 1.0 / p;
    return {DensityMatrix4::from_matrix(m), std::min(p, 1.0)};
}

double kraus_completion_check(const FilterSettings &s) {
    const Mat4 f = filter_operator(s);
    return hermitian_eigenvalues(f.adjoint() * f)[0];
}

FilterSettings solve_constraints(const FamilyParams &p, std::optional<double> path_epsilon) {
    if (!(p.gamma >= 0.0 && p.gamma <= 1.0)) {
        throw ParamOutOfRange("gamma must lie in [0, 1], got " + error_number(p.gamma));
    }
    switch (p.family) {
        case Family::kBellPhi: {
            const double r = std::sqrt(checked_tan(p.theta1, "theta1"));
            return from_ratios(r, r);
        }
        case Family::kBellPsi: {
            const double r = std::sqrt(checked_tan(p.theta2, "theta2"));
            return from_ratios(r, 1.0 / r);
        }
        case Family::kTwoBellMixture: {
            const double t1 = checked_tan(p.theta1, "theta1");
            const double t2 = checked_tan(p.theta2, "theta2");
            return from_ratios(std::sqrt(t1 * t2), std::sqrt(t1 / t2));
        }
        case Family::kWerner: {
            checked_tan(p.theta1, "theta1");
            const double e = 0.25 * (1.0 - p.gamma);
            const double c = std::cos(p.theta1), s = std::sin(p.theta1);
            const double r = std::pow((e + p.gamma * s * s) / (e + p.gamma * c * c), 0.25);
            return from_ratios(r, r);
        }
        case Family::kEntSep: {
            const double t = checked_tan(p.theta2, "theta2");
            const double eps = checked_epsilon(path_epsilon, p.family);
            return from_ratios(eps * t, eps);
        }
        case Family::kMemsBound: {
            const double eps = checked_epsilon(path_epsilon, p.family);
            return from_ratios(eps, eps);
        }
    }
    throw ParamOutOfRange("unknown state family");
}

}  // namespace bsf
