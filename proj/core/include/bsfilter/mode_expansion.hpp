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

#include "bsfilter/filter.hpp"
#include "bsfilter/states.hpp"

namespace bsf {

/// Occupation of one optical slot: empty, or one photon with V/H polarization.
enum class Slot : std::size_t { kEmpty = 0, kV = 1, kH = 2 };

/// Photon-level output of the four variable beam splitters.
///
/// Each arm has a transmitted slot and a reflected (ancilla) slot; a photon
/// entering arm A with polarization p ends up either transmitted,
/// eta_p |p>_A |0>_anc, or reflected, sqrt(1 - eta_p^2) |0>_A |p>_anc. The
/// reflected photon keeps its polarization, so the map is an isometry and the
/// squared norm of every outcome block sums to one.
class ExtendedState {
   public:
    static constexpr std::size_t kSize = 81;

    Complex amplitude(Slot arm_a, Slot arm_b, Slot ancilla_a, Slot ancilla_b) const {
        return amplitudes_[index(arm_a, arm_b, ancilla_a, ancilla_b)];
    }

    /// Amplitude in the coarser record that only notes whether each ancilla
    /// holds a photon (0/1), summing over the ancilla polarization.
    Complex ancilla_record_amplitude(Slot arm_a, Slot arm_b, int ancilla_a_occupied, int ancilla_b_occupied) const;

    double norm_squared() const;
    /// Weight of the event with one transmitted photon in each arm.
    double coincidence_weight() const;
    /// Weight of all events with at least one reflected photon.
    double ancilla_excited_weight() const;

    const std::array<Complex, kSize> &amplitudes() const { return amplitudes_; }

    static constexpr std::size_t index(Slot arm_a, Slot arm_b, Slot ancilla_a, Slot ancilla_b) {
        return ((static_cast<std::size_t>(arm_a) * 3 + static_cast<std::size_t>(arm_b)) * 3 +
                static_cast<std::size_t>(ancilla_a)) *
                   3 +
               static_cast<std::size_t>(ancilla_b);
    }

   private:
    friend ExtendedState full_mode_output(const PureState4 &psi, const FilterSettings &s);
    std::array<Complex, kSize> amplitudes_{};
};

/// Pass a pure polarization state through the four beam splitters.
ExtendedState full_mode_output(const PureState4 &psi, const FilterSettings &s);

/// Post-select one transmitted photon per arm with both ancillas empty.
/// Throws VanishingEnsemble when the block weight is <= 1e-12.
FilterOutcome coincidence_project(const ExtendedState &ext);

/// Photon-level route for mixed inputs: eigendecompose rho, run each pure
/// component through full_mode_output, and mix the unnormalized coincidence
/// blocks with the eigenvalue weights.
FilterOutcome mode_level_filter(const DensityMatrix4 &rho, const FilterSettings &s);

}  // namespace bsf
