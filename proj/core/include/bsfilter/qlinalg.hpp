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
#include <complex>
#include <cstddef>
#include <span>

namespace bsf {

using Complex = std::complex<double>;

/// Dense N x N complex matrix stored row-major. Only N = 2 and N = 4 are used.
template <std::size_t N>
class SquareMatrix {
   public:
    static constexpr std::size_t kDim = N;

    constexpr SquareMatrix() = default;

    static SquareMatrix identity();
    static SquareMatrix diagonal(const std::array<Complex, N> &entries);
    static SquareMatrix from_rows(const std::array<std::array<Complex, N>, N> &rows);

    Complex &operator()(std::size_t row, std::size_t col) { return entries_[row * N + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return entries_[row * N + col]; }

    std::span<const Complex, N * N> entries() const { return entries_; }

    SquareMatrix adjoint() const;
    SquareMatrix conjugate() const;
    SquareMatrix transpose() const;
    Complex trace() const;
    double frobenius_norm() const;
    bool is_finite() const;

    SquareMatrix &operator+=(const SquareMatrix &rhs);
    SquareMatrix &operator-=(const SquareMatrix &rhs);
    SquareMatrix &operator*=(Complex scale);

    friend SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix &rhs) { return lhs += rhs; }
    friend SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix &rhs) { return lhs -= rhs; }
    friend SquareMatrix operator*(SquareMatrix lhs, Complex scale) { return lhs *= scale; }
    friend SquareMatrix operator*(Complex scale, SquareMatrix rhs) { return rhs *= scale; }
    friend SquareMatrix operator*(const SquareMatrix &lhs, const SquareMatrix &rhs) {
        SquareMatrix out;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                const Complex a = lhs(i, k);
                if (a == Complex{}) continue;
                for (std::size_t j = 0; j < N; ++j) out(i, j) += a * rhs(k, j);
            }
        }
        return out;
    }
    friend bool operator==(const SquareMatrix &, const SquareMatrix &) = default;

   private:
    std::array<Complex, N * N> entries_{};
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N> &a, const SquareMatrix<N> &b);

/// max |m - m^dagger| over all entries.
template <std::size_t N>
double hermiticity_error(const SquareMatrix<N> &m);

/// Kronecker product, (a (x) b)[2i+k][2j+l] = a[i][j] * b[k][l].
Mat4 tensor(const Mat2 &a, const Mat2 &b);

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

enum class Subsystem { kA, kB };

const char *subsystem_name(Subsystem s);

/// Partial trace on a general 4x4 operator. kA keeps the first factor.
Mat2 partial_trace(const Mat4 &m, Subsystem keep);

// Validation tolerances shared by every density-matrix wrapper.
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdFloor = -1e-10;
// Looser bound accepted by the eigensolvers themselves.
inline constexpr double kEigenHermitianTolerance = 1e-9;

/// A validated quantum state: Hermitian, unit trace and positive semidefinite.
/// Construction throws ValidationError; the wrapped matrix is never repaired.
template <std::size_t N>
class DensityMatrix {
   public:
    static DensityMatrix from_matrix(const SquareMatrix<N> &m);

    const SquareMatrix<N> &matrix() const { return m_; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    double purity() const;

   private:
    explicit DensityMatrix(const SquareMatrix<N> &m) : m_(m) {}
    SquareMatrix<N> m_;
};

using DensityMatrix2 = DensityMatrix<2>;
using DensityMatrix4 = DensityMatrix<4>;

/// Reduced single-qubit state; keep = kA returns Tr_B[rho].
DensityMatrix2 partial_trace(const DensityMatrix4 &rho, Subsystem keep);

template <std::size_t N>
struct HermitianEigensystem {
    std::array<double, N> values;  // descending
    SquareMatrix<N> vectors;       // column j pairs with values[j]
};

/// Cyclic Jacobi diagonalization. Throws NotHermitian if max|m - m^dagger| > 1e-9
/// and ConvergenceFailure after 100 sweeps.
template <std::size_t N>
HermitianEigensystem<N> hermitian_eigensystem(const SquareMatrix<N> &m);

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const SquareMatrix<N> &m);

/// Eigenvalues of an arbitrary 4x4 matrix via Hessenberg reduction and
/// Wilkinson-shifted complex QR. Order is unspecified.
std::array<Complex, 4> eigenvalues_general4(const Mat4 &m);

/// Singular values by one-sided (Hestenes) Jacobi, descending. Small singular
/// values carry absolute error of order eps * |m|, with no square-root loss.
std::array<double, 4> singular_values4(const Mat4 &m);

}  // namespace bsf
