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
#include <cmath>
#include <cstdint>
#include <random>

#include "bsfilter/qlinalg.hpp"
#include "bsfilter/states.hpp"

namespace bsf::testing {

/// Uniform / Gaussian draws for tests. Not required to be portable.
class TestRng {
   public:
    explicit TestRng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    Complex complex_normal() {
        const double re = normal();
        return {re, normal()};
    }
    Complex unit_phase() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

    Mat2 matrix2() {
        Mat2 m;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(i, j) = complex_normal();
        return m;
    }
    Mat4 matrix4() {
        Mat4 m;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = complex_normal();
        return m;
    }

    /// Haar-ish SU(2) element times a global phase.
    Mat2 unitary2() {
        Complex a = complex_normal(), b = complex_normal();
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        a /= n;
        b /= n;
        Mat2 u = Mat2::from_rows({{{a, -std::conj(b)}, {b, std::conj(a)}}});
        return u * unit_phase();
    }

    /// Random X-shaped density matrix: positive diagonal and coherences on
    /// (VH,HV) and (VV,HH) bounded by the PSD condition.
    Mat4 x_state() {
        std::array<double, 4> p{};
        double total = 0.0;
        for (double &x : p) {
            x = -std::log(uniform(1e-12, 1.0));
            total += x;
        }
        for (double &x : p) x /= total;
        Mat4 m = Mat4::diagonal({p[0], p[1], p[2], p[3]});
        const Complex z23 = std::polar(uniform() * std::sqrt(p[1] * p[2]), uniform(0.0, 2.0 * std::numbers::pi));
        const Complex z14 = std::polar(uniform() * std::sqrt(p[0] * p[3]), uniform(0.0, 2.0 * std::numbers::pi));
        m(1, 2) = z23;
        m(2, 1) = std::conj(z23);
        m(0, 3) = z14;
        m(3, 0) = std::conj(z14);
        return m;
    }

   private:
    std::mt19937_64 engine_;
};

/// Closed-form concurrence of an X-shaped state.
inline double x_state_concurrence(const Mat4 &m) {
    const double a = std::abs(m(1, 2)) - std::sqrt(m(0, 0).real() * m(3, 3).real());
    const double b = std::abs(m(0, 3)) - std::sqrt(m(1, 1).real() * m(2, 2).real());
    return 2.0 * std::max({0.0, a, b});
}

/// Binary entropy evaluated independently of the library.
inline double h2(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log(x) / std::log(2.0) - (1.0 - x) * std::log(1.0 - x) / std::log(2.0);
}

/// Trace distance (1/2)||a - b||_1 for Hermitian a, b.
inline double trace_distance(const Mat4 &a, const Mat4 &b) {
    const auto ev = hermitian_eigenvalues(Mat4(a - b));
    double s = 0.0;
    for (double x : ev) s += std::abs(x);
    return 0.5 * s;
}

/// Brute-force reduced state: sum over the traced index written out with explicit kets.
inline Mat2 brute_reduce(const Mat4 &m, bool keep_a) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const int row = keep_a ? (i << 1) | k : (k << 1) | i;
                const int col = keep_a ? (j << 1) | k : (k << 1) | j;
                out(i, j) += m(row, col);
            }
    return out;
}

inline bool is_x_shaped(const Mat4 &m, double tol = 0.0) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j && i + j != 3 && std::abs(m(i, j)) > tol) return false;
    return true;
}

}  // namespace bsf::testing
