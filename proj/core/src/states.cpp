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

#include "bsfilter/states.hpp"

#include <cmath>
#include <string>

#include "bsfilter/errors.hpp"

namespace bsf {

namespace {

constexpr double kAngleSlack = 1e-12;

void check_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ParamOutOfRange("gamma must lie in [0, 1], got " + error_number(gamma));
    }
}

void check_theta(double theta, const char *name) {
    if (!(theta >= -kAngleSlack && theta <= std::numbers::pi / 2 + kAngleSlack)) {
        throw ParamOutOfRange(std::string(name) + " must lie in [0, pi/2], got " + error_number(theta));
    }
}

double sign_factor(Sign s) { return s == Sign::kPlus ? 1.0 : -1.0; }

Mat4 projector(const PureState4 &psi) {
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = psi[i] * std::conj(psi[j]);
    }
    return out;
}

}  // namespace

PureState4 PureState4::from_amplitudes(const std::array<Complex, 4> &amplitudes) {
    double norm2 = 0.0;
    for (const Complex &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("pure state has non-finite amplitudes");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > kUnitNormTolerance) {
        throw ValidationError("pure state is not unit norm: |psi| = " + error_number(std::sqrt(norm2)));
    }
    return PureState4(amplitudes);
}

DensityMatrix4 PureState4::density() const { return DensityMatrix4::from_matrix(projector(*this)); }

const char *family_name(Family f) {
    switch (f) {
        case Family::kBellPhi:
            return "bell-phi";
        case Family::kBellPsi:
            return "bell-psi";
        case Family::kTwoBellMixture:
            return "two-bell";
        case Family::kWerner:
            return "werner";
        case Family::kEntSep:
            return "ent-sep";
        case Family::kMemsBound:
            return "mems";
    }
    return "unknown";
}

PureState4 bell_phi(double theta, Sign sign) {
    check_theta(theta, "theta");
    return PureState4::from_amplitudes({std::cos(theta), 0.0, 0.0, sign_factor(sign) * std::sin(theta)});
}

PureState4 bell_psi(double theta, Sign sign) {
    check_theta(theta, "theta");
    return PureState4::from_amplitudes({0.0, std::cos(theta), sign_factor(sign) * std::sin(theta), 0.0});
}

DensityMatrix4 two_bell_mixture(double gamma, double theta1, double theta2) {
    check_gamma(gamma);
    const Mat4 m = gamma * projector(bell_phi(theta1)) + (1.0 - gamma) * projector(bell_psi(theta2));
    return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 werner(double gamma, double theta) {
    check_gamma(gamma);
    const Mat4 m = (0.25 * (1.0 - gamma)) * Mat4::identity() + gamma * projector(bell_phi(theta));
    return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 entangled_separable(double gamma, double theta) {
    check_gamma(gamma);
    Mat4 m = gamma * projector(bell_psi(theta));
    m(kVV, kVV) += 1.0 - gamma;
    return DensityMatrix4::from_matrix(m);
}

double mems_g(double gamma) { return gamma >= 2.0 / 3.0 ? gamma / 2.0 : 1.0 / 3.0; }

DensityMatrix4 mems_bound_state(double gamma) {
    check_gamma(gamma);
    const double g = mems_g(gamma);
    Mat4 m = Mat4::diagonal({1.0 - 2.0 * g, g, g, 0.0});
    m(kVH, kHV) = gamma / 2.0;
    m(kHV, kVH) = gamma / 2.0;
    return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 make_state(const FamilyParams &p) {
    switch (p.family) {
        case Family::kBellPhi:
            return bell_phi(p.theta1, p.sign).density();
        case Family::kBellPsi:
            return bell_psi(p.theta2, p.sign).density();
        case Family::kTwoBellMixture:
            return two_bell_mixture(p.gamma, p.theta1, p.theta2);
        case Family::kWerner:
            return werner(p.gamma, p.theta1);
        case Family::kEntSep:
            return entangled_separable(p.gamma, p.theta2);
        case Family::kMemsBound:
            return mems_bound_state(p.gamma);
    }
    throw ParamOutOfRange("unknown state family");
}

double SeededNormal::uniform() {
    // 53 random mantissa bits, shifted off zero.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double SeededNormal::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

DensityMatrix4 random_density(std::uint64_t seed, int rank) {
    if (rank < 1 || rank > 4) throw ParamOutOfRange("rank must lie in [1, 4], got " + error_number(rank));
    SeededNormal normal(seed);
    std::array<std::array<Complex, 4>, 4> g{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (int k = 0; k < rank; ++k) g[i][k] = normal.next_complex();
    }
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            Complex acc{};
            for (int k = 0; k < rank; ++k) acc += g[i][k] * std::conj(g[j][k]);
            m(i, j) = acc;
        }
    }
    const double trace = m.trace().real();
    m *= 1.0 / trace;
    return DensityMatrix4::from_matrix(m);
}

PureState4 random_pure_state(std::uint64_t seed) {
    SeededNormal normal(seed);
    std::array<Complex, 4> a{};
    double norm2 = 0.0;
    for (Complex &z : a) {
        z = normal.next_complex();
        norm2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex &z : a) z *= inv;
    return PureState4::from_amplitudes(a);
}

}  // namespace bsf
