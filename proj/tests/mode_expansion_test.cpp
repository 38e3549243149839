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

#include "bsfilter/errors.hpp"
#include "bsfilter/measures.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace bsf;
using bsf::testing::TestRng;
using bsf::testing::trace_distance;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr Slot E = Slot::kEmpty, V = Slot::kV, H = Slot::kH;
}  // namespace

TEST(full_mode_output, identity_settings_leave_coincidences) {
    const auto psi = bell_psi(kPi / 5);
    const auto ext = full_mode_output(psi, FilterSettings::identity());
    EXPECT_NEAR(ext.amplitude(V, H, E, E).real(), std::cos(kPi / 5), 1e-15);
    EXPECT_NEAR(ext.amplitude(H, V, E, E).real(), std::sin(kPi / 5), 1e-15);
    EXPECT_EQ(ext.ancilla_excited_weight(), 0.0);
}

TEST(full_mode_output, single_product_term) {
    const auto vh = PureState4::from_amplitudes({0.0, 1.0, 0.0, 0.0});
    const auto ext = full_mode_output(vh, {0.6, 1.0, 1.0, 0.8});
    EXPECT_NEAR(ext.amplitude(V, H, E, E).real(), 0.48, 1e-15);
    EXPECT_NEAR(ext.amplitude(V, E, E, H).real(), 0.36, 1e-15);
    EXPECT_NEAR(ext.amplitude(E, H, V, E).real(), 0.64, 1e-15);
    EXPECT_NEAR(ext.amplitude(E, E, V, H).real(), 0.48, 1e-15);
    EXPECT_NEAR(ext.ancilla_record_amplitude(V, E, 0, 1).real(), 0.36, 1e-15);
    EXPECT_NEAR(ext.ancilla_record_amplitude(E, E, 1, 1).real(), 0.48, 1e-15);
    EXPECT_NEAR(ext.norm_squared(), 1.0, 1e-15);
    EXPECT_NEAR(ext.coincidence_weight(), 0.48 * 0.48, 1e-15);
}

TEST(coincidence_project, pure_concentration) {
    const double theta = kPi / 6;
    const auto out = coincidence_project(full_mode_output(bell_psi(theta), {std::tan(theta), 1, 1, 1}));
    EXPECT_NEAR(out.probability, 0.5, 1e-12);
    EXPECT_NEAR(concurrence(out.state), 1.0, 1e-9);
}

TEST(coincidence_project, blocked_arm_vanishes) {
    EXPECT_THROW(coincidence_project(full_mode_output(random_pure_state(3), {0, 0, 1, 1})), VanishingEnsemble);
}

TEST(mode_expansion, agrees_with_effective_filter) {
    TestRng rng(41);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto psi = random_pure_state(seed);
        const FilterSettings s(rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform());
        const auto ext = full_mode_output(psi, s);
        EXPECT_NEAR(ext.coincidence_weight() + ext.ancilla_excited_weight(), 1.0, 1e-12);
        EXPECT_NEAR(ext.norm_squared(), 1.0, 1e-12);
        const auto direct = apply_filter(psi.density(), s);
        const auto oracle = coincidence_project(ext);
        EXPECT_NEAR(oracle.probability, direct.probability, 1e-10);
        EXPECT_LE(trace_distance(oracle.state.matrix(), direct.state.matrix()), 1e-10) << seed;
    }
}

TEST(mode_expansion, mixed_inputs_via_eigendecomposition) {
    TestRng rng(42);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto rho = random_density(seed, 1 + static_cast<int>(seed % 4));
        const FilterSettings s(rng.uniform(0.05, 1), rng.uniform(0.05, 1), rng.uniform(0.05, 1), rng.uniform(0.05, 1));
        const auto direct = apply_filter(rho, s);
        const auto oracle = mode_level_filter(rho, s);
        EXPECT_NEAR(oracle.probability, direct.probability, 1e-10);
        EXPECT_LE(trace_distance(oracle.state.matrix(), direct.state.matrix()), 1e-10) << seed;
    }
}

TEST(mode_expansion, mixing_commutes_with_the_oracle) {
    // p F(a) + (1-p) F(b), weighted by each success probability, equals F(p a + (1-p) b).
    TestRng rng(43);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto a = random_pure_state(2 * seed), b = random_pure_state(2 * seed + 1);
        const double p = rng.uniform();
        const FilterSettings s(rng.uniform(0.05, 1), rng.uniform(0.05, 1), rng.uniform(0.05, 1), rng.uniform(0.05, 1));
        const auto fa = coincidence_project(full_mode_output(a, s));
        const auto fb = coincidence_project(full_mode_output(b, s));
        const double prob = p * fa.probability + (1 - p) * fb.probability;
        const Mat4 mixed_out =
            (p * fa.probability / prob) * fa.state.matrix() + ((1 - p) * fb.probability / prob) * fb.state.matrix();
        const auto mix = DensityMatrix4::from_matrix(p * a.density().matrix() + (1 - p) * b.density().matrix());
        const auto direct = apply_filter(mix, s);
        EXPECT_NEAR(direct.probability, prob, 1e-12);
        EXPECT_LE(trace_distance(direct.state.matrix(), mixed_out), 1e-10);
    }
}
