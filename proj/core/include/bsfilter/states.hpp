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
#include <cstdint>
#include <numbers>
#include <random>

#include "bsfilter/qlinalg.hpp"

namespace bsf {

// Basis ordering used everywhere: |VV>, |VH>, |HV>, |HH>.
inline constexpr std::size_t kVV = 0;
inline constexpr std::size_t kVH = 1;
inline constexpr std::size_t kHV = 2;
inline constexpr std::size_t kHH = 3;

inline constexpr double kUnitNormTolerance = 1e-12;

class PureState4 {
   public:
    /// Throws ValidationError unless the vector has unit norm within 1e-12.
    static PureState4 from_amplitudes(const std::array<Complex, 4> &amplitudes);

    const std::array<Complex, 4> &amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

    DensityMatrix4 density() const;

   private:
    explicit PureState4(const std::array<Complex, 4> &a) : amplitudes_(a) {}
    std::array<Complex, 4> amplitudes_;
};

enum class Sign { kPlus, kMinus };

enum class Family { kBellPhi, kBellPsi, kTwoBellMixture, kWerner, kEntSep, kMemsBound };

const char *family_name(Family f);

/// Parameters for any of the state families. The phi-type angle is theta1
/// (BellPhi, TwoBellMixture, Werner); the psi-type angle is theta2 (BellPsi,
/// TwoBellMixture, EntSep). Angles a family does not use are ignored.
struct FamilyParams {
    Family family = Family::kWerner;
    double gamma = 1.0;
    double theta1 = std::numbers::pi / 4;
    double theta2 = std::numbers::pi / 4;
    Sign sign = Sign::kPlus;
};

/// cos(theta)|VV> +- sin(theta)|HH>
PureState4 bell_phi(double theta, Sign sign = Sign::kPlus);
/// cos(theta)|VH> +- sin(theta)|HV>
PureState4 bell_psi(double theta, Sign sign = Sign::kPlus);

/// gamma |phi+(theta1)><phi+| + (1 - gamma) |psi+(theta2)><psi+|
DensityMatrix4 two_bell_mixture(double gamma, double theta1, double theta2);

/// (1 - gamma) I/4 + gamma |phi+(theta)><phi+|
DensityMatrix4 werner(double gamma, double theta);

/// gamma |psi+(theta)><psi+| + (1 - gamma) |VV><VV|
DensityMatrix4 entangled_separable(double gamma, double theta);

/// g(gamma) = gamma/2 for gamma >= 2/3, else 1/3.
double mems_g(double gamma);

/// diag(1 - 2g, g, g, 0) with gamma/2 on the |VH><HV| coherences. Concurrence equals gamma.
DensityMatrix4 mems_bound_state(double gamma);

DensityMatrix4 make_state(const FamilyParams &params);

/// Gaussian source for the random samplers: mt19937_64 feeding a
/// Box-Muller transform, so sequences are reproducible across standard libraries.
class SeededNormal {
   public:
    explicit SeededNormal(std::uint64_t seed) : engine_(seed) {}
    double uniform();  // in (0, 1)
    double next();
    Complex next_complex() {
        const double re = next();
        return {re, next()};
    }

   private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Ginibre sample G G^dagger / Tr(G G^dagger), G of shape 4 x rank with
/// standard complex Gaussian entries.
DensityMatrix4 random_density(std::uint64_t seed, int rank);

/// Haar-distributed pure state (normalized complex Gaussian vector).
PureState4 random_pure_state(std::uint64_t seed);

}  // namespace bsf
