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

#include "bsfilter/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "bsfilter/errors.hpp"

namespace bsf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kJacobiOffTolerance = 1e-14;
constexpr int kJacobiMaxSweeps = 100;
constexpr int kQrIterationBudget = 10000;
constexpr int kSvdMaxSweeps = 100;

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

}  // namespace

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::identity() {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) out(i, i) = 1.0;
    return out;
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::diagonal(const std::array<Complex, N> &entries) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) out(i, i) = entries[i];
    return out;
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::from_rows(const std::array<std::array<Complex, N>, N> &rows) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) out(i, j) = rows[i][j];
    }
    return out;
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::adjoint() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj((*this)(j, i));
    }
    return out;
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::conjugate() const {
    SquareMatrix out;
    for (std::size_t k = 0; k < N * N; ++k) out.entries_[k] = std::conj(entries_[k]);
    return out;
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::transpose() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) out(i, j) = (*this)(j, i);
    }
    return out;
}

template <std::size_t N>
Complex SquareMatrix<N>::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
}

template <std::size_t N>
double SquareMatrix<N>::frobenius_norm() const {
    double s = 0.0;
    for (const Complex &z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

template <std::size_t N>
bool SquareMatrix<N>::is_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Complex &z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

template <std::size_t N>
SquareMatrix<N> &SquareMatrix<N>::operator+=(const SquareMatrix &rhs) {
    for (std::size_t k = 0; k < N * N; ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

template <std::size_t N>
SquareMatrix<N> &SquareMatrix<N>::operator-=(const SquareMatrix &rhs) {
    for (std::size_t k = 0; k < N * N; ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

template <std::size_t N>
SquareMatrix<N> &SquareMatrix<N>::operator*=(Complex scale) {
    for (Complex &z : entries_) z *= scale;
    return *this;
}

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N> &a, const SquareMatrix<N> &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
    return worst;
}

template <std::size_t N>
double hermiticity_error(const SquareMatrix<N> &m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i; j < N; ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
    return worst;
}

Mat4 tensor(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
            }
        }
    }
    return out;
}

Mat2 pauli_x() { return Mat2::from_rows({{{0.0, 1.0}, {1.0, 0.0}}}); }
Mat2 pauli_y() { return Mat2::from_rows({{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}}); }
Mat2 pauli_z() { return Mat2::from_rows({{{1.0, 0.0}, {0.0, -1.0}}}); }

const char *subsystem_name(Subsystem s) { return s == Subsystem::kA ? "A" : "B"; }

Mat2 partial_trace(const Mat4 &m, Subsystem keep) {
    Mat2 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < 2; ++k) {
                acc += keep == Subsystem::kA ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

template <std::size_t N>
DensityMatrix<N> DensityMatrix<N>::from_matrix(const SquareMatrix<N> &m) {
    if (!m.is_finite()) throw ValidationError("density matrix has non-finite entries");
    const double herm = hermiticity_error(m);
    if (herm > kHermitianTolerance) {
        throw ValidationError("density matrix is not Hermitian: max|m - m^dagger| = " + format_value(herm) +
                              " exceeds " + format_value(kHermitianTolerance));
    }
    const double trace_err = std::abs(m.trace() - Complex{1.0});
    if (trace_err > kTraceTolerance) {
        throw ValidationError("density matrix does not have unit trace: |Tr m - 1| = " + format_value(trace_err) +
                              " exceeds " + format_value(kTraceTolerance));
    }
    const auto eig = hermitian_eigenvalues(m);
    if (eig.back() < kPsdFloor) {
        throw ValidationError("density matrix is not positive semidefinite: min eigenvalue " +
                              format_value(eig.back()) + " below " + format_value(kPsdFloor));
    }
    return DensityMatrix(m);
}

template <std::size_t N>
double DensityMatrix<N>::purity() const {
    double p = 0.0;
    for (const Complex &z : m_.entries()) p += std::norm(z);
    return p;
}

DensityMatrix2 partial_trace(const DensityMatrix4 &rho, Subsystem keep) {
    return DensityMatrix2::from_matrix(partial_trace(rho.matrix(), keep));
}

template <std::size_t N>
HermitianEigensystem<N> hermitian_eigensystem(const SquareMatrix<N> &m) {
    if (!m.is_finite()) throw NotHermitian("matrix has non-finite entries");
    const double herm = hermiticity_error(m);
    if (herm > kEigenHermitianTolerance) {
        throw NotHermitian("hermitian eigensolver input has max|m - m^dagger| = " + format_value(herm));
    }
    // Work on the exactly Hermitian part.
    SquareMatrix<N> a = 0.5 * (m + m.adjoint());
    SquareMatrix<N> v = SquareMatrix<N>::identity();
    const double scale = std::max(1.0, a.frobenius_norm());

    auto off_norm = [&a]() {
        double s = 0.0;
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) s += std::norm(a(p, q));
        }
        return std::sqrt(2.0 * s);
    };

    int sweep = 0;
    while (off_norm() > kJacobiOffTolerance * scale) {
        if (++sweep > kJacobiMaxSweeps) {
            throw ConvergenceFailure("Jacobi eigensolver did not converge in " + error_number(kJacobiMaxSweeps) +
                                     " sweeps");
        }
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                // Phase the (p,q) entry real, then apply a real Givens rotation.
                const Complex phase = std::conj(a(p, q)) / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // U = D G, D = diag(.., phase at q, ..).
                const Complex upp = c, upq = s, uqp = -s * phase, uqq = c * phase;
                for (std::size_t k = 0; k < N; ++k) {  // a <- a U
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < N; ++k) {  // a <- U^dagger a
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < N; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }

    std::array<std::size_t, N> order;
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    HermitianEigensystem<N> out;
    for (std::size_t j = 0; j < N; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t k = 0; k < N; ++k) out.vectors(k, j) = v(k, order[j]);
    }
    return out;
}

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const SquareMatrix<N> &m) {
    return hermitian_eigensystem(m).values;
}

namespace {

// Unitary G = [[c, s], [-conj(s), c]] with G (x, y)^T = (r, 0)^T.
struct Givens {
    double c;
    Complex s;
};

Givens make_givens(Complex x, Complex y) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ay == 0.0) return {1.0, 0.0};
    if (ax == 0.0) return {0.0, std::conj(y) / ay};
    const double norm = std::hypot(ax, ay);
    const Complex phase = x / ax;
    return {ax / norm, phase * std::conj(y) / norm};
}

std::array<Complex, 2> eigenvalues_2x2(Complex a, Complex b, Complex c, Complex d) {
    const Complex half_trace = 0.5 * (a + d);
    const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
    return {half_trace + disc, half_trace - disc};
}

}  // namespace

std::array<Complex, 4> eigenvalues_general4(const Mat4 &m) {
    constexpr int n = 4;
    if (!m.is_finite()) throw ConvergenceFailure("general eigensolver input has non-finite entries");
    Mat4 h = m;

    // Householder reduction to upper Hessenberg form.
    for (int k = 0; k < n - 2; ++k) {
        std::array<Complex, n> v{};
        double xnorm = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        const Complex x0 = h(k + 1, k);
        const Complex phase = std::abs(x0) == 0.0 ? Complex{1.0} : x0 / std::abs(x0);
        const Complex alpha = -phase * xnorm;
        for (int i = k + 1; i < n; ++i) v[i] = h(i, k);
        v[k + 1] -= alpha;
        double vnorm = 0.0;
        for (int i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) continue;
        for (int i = k + 1; i < n; ++i) v[i] /= vnorm;
        for (int j = 0; j < n; ++j) {  // h <- (I - 2vv^dagger) h
            Complex dot{};
            for (int i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
            for (int i = k + 1; i < n; ++i) h(i, j) -= 2.0 * v[i] * dot;
        }
        for (int i = 0; i < n; ++i) {  // h <- h (I - 2vv^dagger)
            Complex dot{};
            for (int j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
            for (int j = k + 1; j < n; ++j) h(i, j) -= 2.0 * dot * std::conj(v[j]);
        }
        for (int i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }

    const double scale = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());
    std::array<Complex, n> eig{};
    int hi = n - 1;
    int iterations = 0;
    int since_deflation = 0;
    while (hi >= 0) {
        if (hi == 0) {
            eig[0] = h(0, 0);
            break;
        }
        int l = hi;
        while (l > 0) {
            const double sub = std::abs(h(l, l - 1));
            if (sub <= kEps * (std::abs(h(l, l)) + std::abs(h(l - 1, l - 1))) || sub <= kEps * kEps * scale) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        if (l == hi) {
            eig[hi] = h(hi, hi);
            --hi;
            since_deflation = 0;
            continue;
        }
        if (l == hi - 1) {
            const auto pair = eigenvalues_2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            eig[hi - 1] = pair[0];
            eig[hi] = pair[1];
            hi -= 2;
            since_deflation = 0;
            continue;
        }
        if (++iterations > kQrIterationBudget) {
            throw ConvergenceFailure("shifted QR exceeded " + error_number(kQrIterationBudget) + " iterations");
        }
        ++since_deflation;

        Complex mu;
        if (since_deflation % 11 == 10) {
            mu = h(hi, hi) + Complex{std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)), 0.0};
        } else {
            const auto pair = eigenvalues_2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            mu = std::abs(pair[0] - h(hi, hi)) < std::abs(pair[1] - h(hi, hi)) ? pair[0] : pair[1];
        }

        for (int k = l; k <= hi; ++k) h(k, k) -= mu;
        std::array<Givens, n> rot{};
        for (int k = l; k < hi; ++k) {
            rot[k] = make_givens(h(k, k), h(k + 1, k));
            const auto [c, s] = rot[k];
            for (int j = k; j <= hi; ++j) {
                const Complex top = h(k, j), bottom = h(k + 1, j);
                h(k, j) = c * top + s * bottom;
                h(k + 1, j) = -std::conj(s) * top + c * bottom;
            }
            h(k + 1, k) = 0.0;
        }
        for (int k = l; k < hi; ++k) {
            const auto [c, s] = rot[k];
            const int last = std::min(k + 2, hi);
            for (int i = l; i <= last; ++i) {
                const Complex left = h(i, k), right = h(i, k + 1);
                h(i, k) = left * c + right * std::conj(s);
                h(i, k + 1) = -left * s + right * c;
            }
        }
        for (int k = l; k <= hi; ++k) h(k, k) += mu;
    }
    return eig;
}

std::array<double, 4> singular_values4(const Mat4 &m) {
    constexpr std::size_t n = 4;
    if (!m.is_finite()) throw ConvergenceFailure("singular value input has non-finite entries");
    Mat4 a = m;
    auto column_dot = [&a](std::size_t i, std::size_t j) {
        Complex s{};
        for (std::size_t k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
        return s;
    };
    for (int sweep = 0;; ++sweep) {
        if (sweep > kSvdMaxSweeps) {
            throw ConvergenceFailure("one-sided Jacobi SVD did not converge in " + error_number(kSvdMaxSweeps) +
                                     " sweeps");
        }
        bool rotated = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double alpha = column_dot(i, i).real();
                const double beta = column_dot(j, j).real();
                const Complex gamma = column_dot(i, j);
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const Complex phase = gamma / g;  // column j is rephased by conj(phase)
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex ci = a(k, i);
                    const Complex cj = a(k, j) * std::conj(phase);
                    a(k, i) = c * ci - s * cj;
                    a(k, j) = s * ci + c * cj;
                }
            }
        }
        if (!rotated) break;
    }
    std::array<double, n> sv{};
    for (std::size_t j = 0; j < n; ++j) sv[j] = std::sqrt(column_dot(j, j).real());
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

template class SquareMatrix<2>;
template class SquareMatrix<4>;
template class DensityMatrix<2>;
template class DensityMatrix<4>;
template double max_abs_diff<2>(const Mat2 &, const Mat2 &);
template double max_abs_diff<4>(const Mat4 &, const Mat4 &);
template double hermiticity_error<2>(const Mat2 &);
template double hermiticity_error<4>(const Mat4 &);
template HermitianEigensystem<2> hermitian_eigensystem<2>(const Mat2 &);
template HermitianEigensystem<4> hermitian_eigensystem<4>(const Mat4 &);
template std::array<double, 2> hermitian_eigenvalues<2>(const Mat2 &);
template std::array<double, 4> hermitian_eigenvalues<4>(const Mat4 &);

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kValidation:
            return "Validation";
        case ErrorKind::kParamOutOfRange:
            return "ParamOutOfRange";
        case ErrorKind::kNotHermitian:
            return "NotHermitian";
        case ErrorKind::kConvergenceFailure:
            return "ConvergenceFailure";
        case ErrorKind::kVanishingEnsemble:
            return "VanishingEnsemble";
        case ErrorKind::kNoSolution:
            return "NoSolution";
        case ErrorKind::kNoFeasiblePoint:
            return "NoFeasiblePoint";
    }
    return "Unknown";
}

}  // namespace bsf
