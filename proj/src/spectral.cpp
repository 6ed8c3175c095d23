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

#include "uncert/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace uncert {

namespace {

using EigenCMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

EigenCMat to_eigen(const ComplexMatrix &m) {
    EigenCMat out(m.dim(), m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            out(r, c) = m.at(r, c);
    return out;
}

ComplexMatrix from_eigen(const EigenCMat &e) {
    ComplexMatrix out(static_cast<int>(e.rows()));
    for (int r = 0; r < out.dim(); ++r)
        for (int c = 0; c < out.dim(); ++c)
            out.at(r, c) = e(r, c);
    return out;
}

/// U f(w) U^dagger for an already-computed spectrum.
template <typename Fn> HermitianMatrix apply_spectral(const Spectrum &s, Fn &&f) {
    const int n = static_cast<int>(s.eigenvalues.size());
    ComplexMatrix scaled(n); // columns of U scaled by f(w_j)
    for (int c = 0; c < n; ++c) {
        const double fv = f(s.eigenvalues[static_cast<std::size_t>(c)]);
        for (int r = 0; r < n; ++r)
            scaled.at(r, c) = fv * s.eigenvectors.at(r, c);
    }
    return hermitize(scaled * s.eigenvectors.adjoint());
}

} // namespace

Spectrum eig_hermitian(const HermitianMatrix &h) {
    Eigen::SelfAdjointEigenSolver<EigenCMat> solver(to_eigen(h.matrix()));
    if (solver.info() != Eigen::Success)
        throw NumericalError("Hermitian eigensolver failed to converge");
    Spectrum s;
    s.eigenvalues.resize(static_cast<std::size_t>(h.dim()));
    for (int i = 0; i < h.dim(); ++i)
        s.eigenvalues[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    s.eigenvectors = from_eigen(solver.eigenvectors());
    return s;
}

double lambda_min(const HermitianMatrix &h) { return eig_hermitian(h).eigenvalues.front(); }

double lambda_max(const HermitianMatrix &h) { return eig_hermitian(h).eigenvalues.back(); }

std::pair<double, double> spectrum_interval(const HermitianMatrix &h) {
    const Spectrum s = eig_hermitian(h);
    return {s.eigenvalues.front(), s.eigenvalues.back()};
}

double spectral_norm(const HermitianMatrix &h) {
    const auto [lo, hi] = spectrum_interval(h);
    return std::max(std::abs(lo), std::abs(hi));
}

double spectral_norm(const ComplexMatrix &x) {
    const HermitianMatrix gram = hermitize(x.adjoint() * x);
    return std::sqrt(std::max(0.0, lambda_max(gram)));
}

bool is_psd(const HermitianMatrix &h, const Tolerance &tol) {
    const Spectrum s = eig_hermitian(h);
    const double scale = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
    return s.eigenvalues.front() >= -tol.bound(scale);
}

HermitianMatrix matrix_power(const HermitianMatrix &p, double alpha, const Tolerance &tol) {
    const Spectrum s = eig_hermitian(p);
    const double scale = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
    const double psd_bound = tol.bound(scale);
    if (s.eigenvalues.front() < -psd_bound)
        throw DomainError("matrix_power: operand is not PSD within tolerance");
    if (alpha < 0.0 && s.eigenvalues.front() <= psd_bound)
        throw DomainError("matrix_power: negative exponent requires a definite operand");
    return apply_spectral(s, [&](double w) {
        const double clamped = std::max(w, 0.0);
        if (clamped == 0.0)
            return 0.0; // support convention, including 0^0 = 0
        return std::pow(clamped, alpha);
    });
}

HermitianMatrix matrix_abs(const ComplexMatrix &a) {
    return matrix_power(hermitize(a.adjoint() * a), 0.5);
}

HermitianMatrix geometric_mean(const HermitianMatrix &a, const HermitianMatrix &b,
                               const Tolerance &tol, GeomMeanInfo *info) {
    if (a.dim() != b.dim())
        throw DimensionError("geometric_mean: operands have different dimensions");
    if (!is_psd(b, tol))
        throw DomainError("geometric_mean: second operand is not PSD");

    Spectrum sa = eig_hermitian(a);
    const double scale = std::max(std::abs(sa.eigenvalues.front()), std::abs(sa.eigenvalues.back()));
    if (sa.eigenvalues.front() < -tol.bound(scale))
        throw DomainError("geometric_mean: first operand is indefinite beyond regularization");

    HermitianMatrix a_eff = a;
    GeomMeanInfo local;
    const double definite_bound = tol.bound(std::max(scale, 1.0));
    if (sa.eigenvalues.front() <= definite_bound) {
        local.regularized = true;
        local.epsilon = 1e-10 * std::max(scale, 1.0);
        ComplexMatrix shifted = a.matrix();
        for (int i = 0; i < a.dim(); ++i)
            shifted.at(i, i) += local.epsilon;
        a_eff = hermitize(shifted);
        sa = eig_hermitian(a_eff);
    }
    if (info != nullptr)
        *info = local;

    const HermitianMatrix a_half = apply_spectral(sa, [](double w) { return std::sqrt(std::max(w, 0.0)); });
    const HermitianMatrix a_ihalf =
        apply_spectral(sa, [](double w) { return w > 0.0 ? 1.0 / std::sqrt(w) : 0.0; });
    const HermitianMatrix middle = hermitize(a_ihalf.matrix() * b.matrix() * a_ihalf.matrix());
    // The conjugation can push tiny eigenvalues slightly negative; a
    // widened tolerance keeps the 1/2 power on the clamped branch.
    Tolerance mid_tol = tol;
    mid_tol.rel = std::max(tol.rel, 1e-7);
    const HermitianMatrix mid_root = matrix_power(middle, 0.5, mid_tol);
    return hermitize(a_half.matrix() * mid_root.matrix() * a_half.matrix());
}

double loewner_geq(const HermitianMatrix &a, const HermitianMatrix &b) {
    if (a.dim() != b.dim())
        throw DimensionError("loewner_geq: operands have different dimensions");
    return lambda_min(hermitize(a.matrix() - b.matrix()));
}

HermitianMatrix inverse_psd(const HermitianMatrix &h, const Tolerance &tol) {
    const Spectrum s = eig_hermitian(h);
    const double scale = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
    if (s.eigenvalues.front() <= tol.bound(std::max(scale, 1.0)))
        throw DomainError("inverse_psd: operand is singular within tolerance");
    return apply_spectral(s, [](double w) { return 1.0 / w; });
}

ComplexMatrix assemble_block2(const ComplexMatrix &a, const ComplexMatrix &x, const ComplexMatrix &b) {
    if (a.dim() != x.dim() || b.dim() != x.dim())
        throw DimensionError("assemble_block2: incompatible block dimensions");
    const int n = a.dim();
    ComplexMatrix out(2 * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            out.at(r, c) = a.at(r, c);
            out.at(r, n + c) = x.at(r, c);
            out.at(n + r, c) = std::conj(x.at(c, r));
            out.at(n + r, n + c) = b.at(r, c);
        }
    return out;
}

bool schur_positivity_check(const HermitianMatrix &a, const ComplexMatrix &x,
                            const HermitianMatrix &b, const Tolerance &tol, SchurCheckInfo *info) {
    if (a.dim() != x.dim() || b.dim() != x.dim())
        throw DimensionError("schur_positivity_check: incompatible block dimensions");
    const HermitianMatrix a_inv = inverse_psd(a, tol); // throws if A singular
    const HermitianMatrix complement =
        hermitize(b.matrix() - x.adjoint() * a_inv.matrix() * x);
    const HermitianMatrix block = hermitize(assemble_block2(a.matrix(), x, b.matrix()));

    const double schur_margin = lambda_min(complement);
    const double block_margin = lambda_min(block);
    if (info != nullptr)
        *info = SchurCheckInfo{schur_margin, block_margin};

    const double schur_bound = tol.bound(std::max({spectral_norm(b), spectral_norm(complement), 1.0}));
    const double block_bound = tol.bound(std::max(spectral_norm(block), 1.0));
    const bool verdict_schur = schur_margin >= -schur_bound;
    const bool verdict_block = block_margin >= -block_bound;
    if (verdict_schur != verdict_block)
        throw NumericalError("schur_positivity_check: Schur-complement and block-eigenvalue "
                             "routes disagree");
    return verdict_schur;
}

} // namespace uncert
