// Copyright 2026 The uncert authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only oracles. Everything here is independent of the library's
// spectral-decomposition path: closed forms, characteristic polynomials,
// and a multiplication-only iterative square root.

#pragma once

#include <cmath>
#include <utility>

#include "uncert/matrix.hpp"

namespace oracle {

using uncert::cplx;
using uncert::ComplexMatrix;

inline ComplexMatrix sigma_x() {
    return ComplexMatrix::from_rows({{cplx(0, 0), cplx(1, 0)}, {cplx(1, 0), cplx(0, 0)}});
}
inline ComplexMatrix sigma_y() {
    return ComplexMatrix::from_rows({{cplx(0, 0), cplx(0, -1)}, {cplx(0, 1), cplx(0, 0)}});
}
inline ComplexMatrix sigma_z() {
    return ComplexMatrix::from_rows({{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(-1, 0)}});
}
inline ComplexMatrix qubit_density(double p) {
    return ComplexMatrix::from_rows({{cplx(p, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1 - p, 0)}});
}

/// Eigenvalues of a 2x2 Hermitian matrix from the characteristic
/// polynomial: (a+c)/2 -+ sqrt(((a-c)/2)^2 + |b|^2), ascending.
inline std::pair<double, double> eig2x2(const ComplexMatrix &h) {
    const double a = h.at(0, 0).real();
    const double c = h.at(1, 1).real();
    const double off = std::abs(h.at(0, 1));
    const double mid = 0.5 * (a + c);
    const double rad = std::sqrt(0.25 * (a - c) * (a - c) + off * off);
    return {mid - rad, mid + rad};
}

/// Newton-Schulz coupled iteration for the PSD square root; uses matrix
/// multiplication only (no eigendecomposition), so it is an independent
/// route against the spectral path. Requires sp(A) within [0, ||A||_F].
inline ComplexMatrix newton_schulz_sqrt(const ComplexMatrix &a, int iters = 80) {
    const int n = a.dim();
    const double scale = std::max(a.frobenius_norm(), 1e-300);
    ComplexMatrix y = a;
    y *= cplx(1.0 / scale, 0.0);
    ComplexMatrix z = ComplexMatrix::identity(n);
    const ComplexMatrix three = ComplexMatrix::identity(n) * cplx(3.0, 0.0);
    for (int k = 0; k < iters; ++k) {
        const ComplexMatrix w = (three - z * y) * cplx(0.5, 0.0);
        y = y * w;
        z = w * z;
    }
    y *= cplx(std::sqrt(scale), 0.0);
    return y;
}

/// tr(rho^alpha sigma_x rho^{1-alpha} sigma_x) for rho = diag(p, 1-p).
inline double qubit_cross_term(double p, double alpha) {
    return std::pow(p, alpha) * std::pow(1.0 - p, 1.0 - alpha) +
           std::pow(p, 1.0 - alpha) * std::pow(1.0 - p, alpha);
}

/// I^alpha(sigma_x) = 1 - qubit_cross_term for the scalar trace.
inline double qubit_skew(double p, double alpha) { return 1.0 - qubit_cross_term(p, alpha); }

/// J(sigma_x) = 2 V - I with V = 1.
inline double qubit_j(double p) { return 1.0 + 2.0 * std::sqrt(p * (1.0 - p)); }

/// U(sigma_x) = sqrt(I J) = |2p - 1| in closed form.
inline double qubit_u(double p) { return std::abs(2.0 * p - 1.0); }

/// I^alpha(E12) + I^alpha(E21) for rho = diag(p, 1-p), scalar trace.
inline double qubit_offdiag_skew_sum(double p, double alpha) {
    return 1.0 - std::pow(p, alpha) * std::pow(1.0 - p, 1.0 - alpha) -
           std::pow(p, 1.0 - alpha) * std::pow(1.0 - p, alpha);
}

} // namespace oracle
