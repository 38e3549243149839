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

#include "bsfilter/qlinalg.hpp"

namespace bsf {

/// Every measure of one two-qubit state, all normalized to [0, 1]
/// (purity to [1/4, 1]).
struct MeasureReport {
    double concurrence = 0.0;
    double eof = 0.0;
    double entropy_joint = 0.0;  // log base 4
    double entropy_a = 0.0;      // log base 2
    double entropy_b = 0.0;      // log base 2
    double linear_entropy = 0.0;
    double purity = 1.0;
};

/// (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y), conjugation in the computational basis.
Mat4 spin_flip(const DensityMatrix4 &rho);

/// The descending lambda-tilde values entering the concurrence: square roots of
/// the eigenvalues of rho * spin_flip(rho).
std::array<double, 4> concurrence_roots(const DensityMatrix4 &rho);

/// Same quantity computed literally from eigenvalues_general4(rho * rho~).
/// Loses about half the digits on zero eigenvalues; kept as a cross-check.
std::array<double, 4> concurrence_roots_from_spin_flip_product(const DensityMatrix4 &rho);

/// max(0, l1 - l2 - l3 - l4); values within a few ulps of the root sum are returned as 0.
double concurrence(const DensityMatrix4 &rho);

/// h(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// Entanglement of formation as a function of concurrence.
double eof_from_concurrence(double c);
double eof(const DensityMatrix4 &rho);

/// -sum lambda log_4 lambda over the eigenvalues of rho.
double von_neumann_joint(const DensityMatrix4 &rho);

/// Base-2 entropy of the reduced state; 1 means maximally mixed.
double subsystem_entropy(const DensityMatrix4 &rho, Subsystem which);

/// (4/3)(1 - Tr rho^2).
double linear_entropy(const DensityMatrix4 &rho);

MeasureReport report(const DensityMatrix4 &rho);

/// (1/2) ||a - b||_1.
double trace_distance(const DensityMatrix4 &a, const DensityMatrix4 &b);

}  // namespace bsf
