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

#include "uncert/quantities.hpp"

#include <cmath>

namespace uncert {

namespace {

QuantityResult raw(AlgebraElement value) {
    QuantityResult q{std::move(value), false, 0.0, false};
    q.hermitian_defect = q.value.hermitian_defect();
    q.hermitian = q.hermitian_defect <= 1e-10 * (1.0 + element_spectral_norm(q.value));
    return q;
}

QuantityResult symmetrized(AlgebraElement value) {
    QuantityResult q{AlgebraElement::zero(value.algebra()), true, 0.0, false};
    q.hermitian_defect = value.hermitian_defect();
    q.value = element_hermitize(value);
    return q;
}

void require_psd(const AlgebraElement &rho, const Tolerance &tol, const char *what) {
    if (!element_is_psd(rho, tol))
        throw DomainError(std::string(what) + ": rho is not PSD within tolerance");
}

void require_self_adjoint(const AlgebraElement &a, const char *what) {
    if (a.hermitian_defect() > 1e-10 * (1.0 + element_spectral_norm(a)))
        throw DomainError(std::string(what) + ": operator must be self-adjoint");
}

void require_phi_density(const TracialMap &map, const AlgebraElement &rho, const Tolerance &tol,
                         const char *what) {
    if (!is_phi_density(map, rho, tol))
        throw PhiDensityError(std::string(what) + ": rho is not a Phi-density");
}

} // namespace

QuantityResult gen_covariance(const TracialMap &map, const AlgebraElement &rho,
                              const AlgebraElement &a, const AlgebraElement &b,
                              const Tolerance &tol) {
    require_phi_density(map, rho, tol, "gen_covariance");
    const AlgebraElement adj = a.adjoint();
    return raw(map.apply(rho * adj * b) - map.apply(rho * adj) * map.apply(rho * b));
}

QuantityResult gen_variance(const TracialMap &map, const AlgebraElement &rho,
                            const AlgebraElement &a, const Tolerance &tol) {
    require_phi_density(map, rho, tol, "gen_variance");
    const AlgebraElement adj = a.adjoint();
    return symmetrized(map.apply(rho * adj * a) - map.apply(rho * adj) * map.apply(rho * a));
}

QuantityResult gen_covariance_prime(const TracialMap &map, const AlgebraElement &rho,
                                    const AlgebraElement &a, const AlgebraElement &b,
                                    const Tolerance &tol) {
    require_psd(rho, tol, "gen_covariance_prime");
    const AlgebraElement phi_rho = map.apply(rho);
    AlgebraElement inv = AlgebraElement::zero(phi_rho.algebra());
    try {
        inv = element_inverse(element_hermitize(phi_rho), tol);
    } catch (const DomainError &) {
        throw DomainError("gen_covariance_prime: Phi(rho) is singular within tolerance");
    }
    const AlgebraElement adj = a.adjoint();
    return raw(map.apply(rho * adj * b) - map.apply(rho * adj) * inv * map.apply(rho * b));
}

QuantityResult gen_variance_prime(const TracialMap &map, const AlgebraElement &rho,
                                  const AlgebraElement &a, const Tolerance &tol) {
    QuantityResult q = gen_covariance_prime(map, rho, a, a, tol);
    return symmetrized(std::move(q.value));
}

QuantityResult gen_correlation_alpha(const TracialMap &map, const AlgebraElement &rho,
                                     const AlgebraElement &a, const AlgebraElement &b,
                                     AlphaParam alpha, const Tolerance &tol) {
    require_psd(rho, tol, "gen_correlation_alpha");
    const AlgebraElement adj = a.adjoint();
    const AlgebraElement rho_alpha = element_power(rho, alpha.value, tol);
    const AlgebraElement rho_comp = element_power(rho, 1.0 - alpha.value, tol);
    return raw(map.apply(rho * adj * b) - map.apply(rho_comp * adj * rho_alpha * b));
}

QuantityResult skew_information_alpha(const TracialMap &map, const AlgebraElement &rho,
                                      const AlgebraElement &a, AlphaParam alpha,
                                      const Tolerance &tol) {
    require_self_adjoint(a, "skew_information_alpha");
    QuantityResult q = gen_correlation_alpha(map, rho, a, a, alpha, tol);
    return symmetrized(std::move(q.value));
}

QuantityResult corr_prime_alpha(const TracialMap &map, const AlgebraElement &rho,
                                const AlgebraElement &a, const AlgebraElement &b, AlphaParam alpha,
                                const Tolerance &tol) {
    require_phi_density(map, rho, tol, "corr_prime_alpha");
    const QuantityResult fwd = gen_correlation_alpha(map, rho, a, b, alpha, tol);
    const QuantityResult rev =
        gen_correlation_alpha(map, rho, b.adjoint(), a.adjoint(), alpha, tol);
    return raw(cplx(0.5, 0.0) * (fwd.value + rev.value));
}

QuantityResult skew_info_prime_alpha(const TracialMap &map, const AlgebraElement &rho,
                                     const AlgebraElement &a, AlphaParam alpha,
                                     const Tolerance &tol) {
    QuantityResult q = corr_prime_alpha(map, rho, a, a, alpha, tol);
    return symmetrized(std::move(q.value));
}

QuantityResult j_quantity(const TracialMap &map, const AlgebraElement &rho,
                          const AlgebraElement &a, const Tolerance &tol) {
    require_self_adjoint(a, "j_quantity");
    const QuantityResult v = gen_variance(map, rho, a, tol);
    const QuantityResult i = skew_information_alpha(map, rho, a, AlphaParam(0.5), tol);
    return symmetrized(cplx(2.0, 0.0) * v.value - i.value);
}

QuantityResult u_quantity(const TracialMap &map, const AlgebraElement &rho,
                          const AlgebraElement &a, const Tolerance &tol) {
    const QuantityResult i = skew_information_alpha(map, rho, a, AlphaParam(0.5), tol);
    const QuantityResult j = j_quantity(map, rho, a, tol);
    GeomMeanInfo info;
    QuantityResult u = symmetrized(element_geometric_mean(i.value, j.value, tol, &info));
    u.regularized = info.regularized;
    return u;
}

double kantorovich(double m, double M) {
    if (!(m > 0.0))
        throw DomainError("kantorovich: m must be positive");
    if (!(m <= M))
        throw DomainError("kantorovich: requires m <= M");
    return (M + m) * (M + m) / (4.0 * M * m);
}

} // namespace uncert
