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

#include "bsfilter/mode_expansion.hpp"

#include <cmath>
#include <string>

#include "bsfilter/errors.hpp"

namespace bsf {

namespace {

constexpr std::array<Slot, 2> kPolarizations = {Slot::kV, Slot::kH};
constexpr std::array<Slot, 3> kSlots = {Slot::kEmpty, Slot::kV, Slot::kH};

struct Branch {
    Slot arm;
    Slot ancilla;
    double amplitude;
};

// One beam splitter acting on a single photon of polarization p.
std::array<Branch, 2> split(Slot p, double eta) {
    return {Branch{p, Slot::kEmpty, eta}, Branch{Slot::kEmpty, p, std::sqrt(std::max(0.0, 1.0 - eta * eta))}};
}

std::array<Complex, 4> coincidence_block(const ExtendedState &ext) {
    std::array<Complex, 4> block{};
    std::size_t k = 0;
    for (Slot a : kPolarizations) {
        for (Slot b : kPolarizations) block[k++] = ext.amplitude(a, b, Slot::kEmpty, Slot::kEmpty);
    }
    return block;
}

}  // namespace

Complex ExtendedState::ancilla_record_amplitude(Slot arm_a, Slot arm_b, int ancilla_a_occupied,
                                                int ancilla_b_occupied) const {
    Complex acc{};
    for (Slot x : kSlots) {
        if ((x != Slot::kEmpty) != (ancilla_a_occupied != 0)) continue;
        for (Slot y : kSlots) {
            if ((y != Slot::kEmpty) != (ancilla_b_occupied != 0)) continue;
            acc += amplitude(arm_a, arm_b, x, y);
        }
    }
    return acc;
}

double ExtendedState::norm_squared() const {
    double s = 0.0;
    for (const Complex &z : amplitudes_) s += std::norm(z);
    return s;
}

double ExtendedState::coincidence_weight() const {
    double s = 0.0;
    for (const Complex &z : coincidence_block(*this)) s += std::norm(z);
    return s;
}

double ExtendedState::ancilla_excited_weight() const {
    double s = 0.0;
    for (Slot aa : kSlots) {
        for (Slot ab : kSlots) {
            if (aa == Slot::kEmpty && ab == Slot::kEmpty) continue;
            for (Slot xa : kSlots) {
                for (Slot xb : kSlots) s += std::norm(amplitude(xa, xb, aa, ab));
            }
        }
    }
    return s;
}

ExtendedState full_mode_output(const PureState4 &psi, const FilterSettings &s) {
    ExtendedState ext;
    std::size_t k = 0;
    for (Slot pa : kPolarizations) {
        const double eta_a = pa == Slot::kV ? s.va() : s.ha();
        for (Slot pb : kPolarizations) {
            const double eta_b = pb == Slot::kV ? s.vb() : s.hb();
            const Complex amp = psi[k++];
            if (amp == Complex{}) continue;
            for (const Branch &ba : split(pa, eta_a)) {
                for (const Branch &bb : split(pb, eta_b)) {
                    ext.amplitudes_[ExtendedState::index(ba.arm, bb.arm, ba.ancilla, bb.ancilla)] +=
                        amp * (ba.amplitude * bb.amplitude);
                }
            }
        }
    }
    return ext;
}

FilterOutcome coincidence_project(const ExtendedState &ext) {
    const auto block = coincidence_block(ext);
    double p = 0.0;
    for (const Complex &z : block) p += std::norm(z);
    if (!(p > kVanishingProbability)) {
        throw VanishingEnsemble("coincidence probability " + error_number(p) + " is below 1e-12");
    }
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = block[i] * std::conj(block[j]) / p;
    }
    return {DensityMatrix4::from_matrix(m), std::min(p, 1.0)};
}

FilterOutcome mode_level_filter(const DensityMatrix4 &rho, const FilterSettings &s) {
    const auto sys = hermitian_eigensystem(rho.matrix());
    Mat4 acc;
    for (std::size_t j = 0; j < 4; ++j) {
        const double weight = sys.values[j];
        if (weight <= 0.0) continue;
        std::array<Complex, 4> v{};
        double norm2 = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            v[i] = sys.vectors(i, j);
            norm2 += std::norm(v[i]);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (Complex &z : v) z *= inv;
        const auto block = coincidence_block(full_mode_output(PureState4::from_amplitudes(v), s));
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = 0; b < 4; ++b) acc(a, b) += weight * block[a] * std::conj(block[b]);
        }
    }
    const double p = acc.trace().real();
    if (!(p > kVanishingProbability)) {
        throw VanishingEnsemble("coincidence probability " + error_number(p) + " is below 1e-12");
    }
    acc *= 1.0 / p;
    return {DensityMatrix4::from_matrix(acc), std::min(p, 1.0)};
}

}  // namespace bsf
