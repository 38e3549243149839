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

#include "bsfilter/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "bsfilter/errors.hpp"

namespace bsf {

namespace {

constexpr double kImagTolerance = 1e-8;
constexpr double kNegativeTolerance = 1e-8;

const Mat4 &spin_flip_kernel() {
    static const Mat4 kernel = tensor(pauli_y(), pauli_y());
    return kernel;
}

// -sum p log p / log(base). Validated states only carry negative eigenvalues
// above -1e-10, which are treated as 0.
template <std::size_t N>
double shannon(const std::array<double, N> &probs, double base) {
    double s = 0.0;
    for (double p : probs) {
        if (p <= 0.0) continue;
        s -= p * std::log(p);
    }
    return std::clamp(s / std::log(base), 0.0, 1.0);
}

// sqrt(rho) written as W with rho = W W^dagger.
Mat4 density_factor(const DensityMatrix4 &rho) {
    const auto sys = hermitian_eigensystem(rho.matrix());
    Mat4 w;
    for (std::size_t j = 0; j < 4; ++j) {
        const double root = std::sqrt(std::max(sys.values[j], 0.0));
        for (std::size_t k = 0; k < 4; ++k) w(k, j) = sys.vectors(k, j) * root;
    }
    return w;
}

}  // namespace

Mat4 spin_flip(const DensityMatrix4 &rho) {
    const Mat4 &yy = spin_flip_kernel();
    return yy * rho.matrix().conjugate() * yy;
}

std::array<double, 4> concurrence_roots(const DensityMatrix4 &rho) {
    // With rho = W W^dagger, the singular values of tau = W^T (Y (x) Y) W are
    // exactly the square roots of the eigenvalues of rho rho~.
    const Mat4 w = density_factor(rho);
    const Mat4 tau = w.transpose() * spin_flip_kernel() * w;
    return singular_values4(tau);
}

std::array<double, 4> concurrence_roots_from_spin_flip_product(const DensityMatrix4 &rho) {
    const Mat4 product = rho.matrix() * spin_flip(rho);
    const auto eig = eigenvalues_general4(product);
    std::array<double, 4> roots{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(eig[i].imag()) > kImagTolerance) {
            throw ConvergenceFailure("rho * rho~ eigenvalue has imaginary part " + error_number(eig[i].imag()));
        }
        double re = eig[i].real();
        if (re < -kNegativeTolerance) {
            throw ConvergenceFailure("rho * rho~ eigenvalue is negative: " + error_number(re));
        }
        roots[i] = std::sqrt(std::max(re, 0.0));
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

double concurrence(const DensityMatrix4 &rho) {
    const auto l = concurrence_roots(rho);
    const double c = l[0] - l[1] - l[2] - l[3];
    // Differences at rounding level of the roots are reported as exact zero.
    const double floor = 16.0 * std::numeric_limits<double>::epsilon() * (l[0] + l[1] + l[2] + l[3]);
    if (c <= floor) return 0.0;
    return std::min(c, 1.0);
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
    if (!(c >= -1e-12 && c <= 1.0 + 1e-12)) {
        throw ParamOutOfRange("concurrence must lie in [0, 1], got " + error_number(c));
    }
    c = std::clamp(c, 0.0, 1.0);
    return std::clamp(binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c))), 0.0, 1.0);
}

double eof(const DensityMatrix4 &rho) { return eof_from_concurrence(concurrence(rho)); }

double von_neumann_joint(const DensityMatrix4 &rho) { return shannon(hermitian_eigenvalues(rho.matrix()), 4.0); }

double subsystem_entropy(const DensityMatrix4 &rho, Subsystem which) {
    return shannon(hermitian_eigenvalues(partial_trace(rho.matrix(), which)), 2.0);
}

double linear_entropy(const DensityMatrix4 &rho) {
    return std::clamp(4.0 / 3.0 * (1.0 - rho.purity()), 0.0, 1.0);
}

double trace_distance(const DensityMatrix4 &a, const DensityMatrix4 &b) {
    double sum = 0.0;
    for (double v : hermitian_eigenvalues(Mat4(a.matrix() - b.matrix()))) sum += std::abs(v);
    return 0.5 * sum;
}

MeasureReport report(const DensityMatrix4 &rho) {
    MeasureReport r;
    r.concurrence = concurrence(rho);
    r.eof = eof_from_concurrence(r.concurrence);
    r.entropy_joint = von_neumann_joint(rho);
    r.entropy_a = subsystem_entropy(rho, Subsystem::kA);
    r.entropy_b = subsystem_entropy(rho, Subsystem::kB);
    r.purity = rho.purity();
    r.linear_entropy = linear_entropy(rho);
    return r;
}

}  // namespace bsf
