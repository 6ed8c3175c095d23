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

#include "uncert/random.hpp"

#include <cmath>
#include <numbers>

namespace uncert {

namespace rng {

double Stream::next_gaussian() {
    const double u = next_unit();
    const double v = next_unit();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

cplx Stream::next_cgauss() {
    const double u = next_unit();
    const double v = next_unit();
    const double r = std::sqrt(-std::log(u)); // |z| for unit-variance complex Gaussian
    return cplx(r * std::cos(2.0 * std::numbers::pi * v), r * std::sin(2.0 * std::numbers::pi * v));
}

} // namespace rng

namespace {

ComplexMatrix gaussian_matrix(int dim, rng::Stream &s) {
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            g.at(r, c) = s.next_cgauss();
    return g;
}

} // namespace

ComplexMatrix random_complex(int dim, std::uint64_t seed) {
    if (dim < 1)
        throw DimensionError("random_complex: dim must be >= 1");
    rng::Stream s(seed);
    return gaussian_matrix(dim, s);
}

HermitianMatrix random_hermitian(int dim, std::uint64_t seed) {
    if (dim < 1)
        throw DimensionError("random_hermitian: dim must be >= 1");
    rng::Stream s(seed);
    return hermitize(gaussian_matrix(dim, s));
}

HermitianMatrix random_density(int dim, std::uint64_t seed) {
    if (dim < 1)
        throw DimensionError("random_density: dim must be >= 1");
    rng::Stream s(seed);
    const ComplexMatrix g = gaussian_matrix(dim, s);
    ComplexMatrix w = g * g.adjoint();
    w *= cplx(1.0 / w.trace().real(), 0.0);
    return hermitize(w);
}

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
    if (dim < 1)
        throw DimensionError("random_unitary: dim must be >= 1");
    rng::Stream s(seed);
    ComplexMatrix g = gaussian_matrix(dim, s);

    // Modified Gram-Schmidt on columns, one re-orthogonalization pass.
    std::vector<cplx> diag_phase(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int prev = 0; prev < c; ++prev) {
                cplx proj(0.0, 0.0);
                for (int r = 0; r < dim; ++r)
                    proj += std::conj(g.at(r, prev)) * g.at(r, c);
                for (int r = 0; r < dim; ++r)
                    g.at(r, c) -= proj * g.at(r, prev);
            }
        }
        double norm2 = 0.0;
        for (int r = 0; r < dim; ++r)
            norm2 += std::norm(g.at(r, c));
        const double inv = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < dim; ++r)
            g.at(r, c) *= inv;
        // Phase-fix: make the "R" diagonal positive so the result follows
        // the Haar measure rather than the QR sign convention.
        const cplx d = g.at(c, c);
        const double a = std::abs(d);
        diag_phase[static_cast<std::size_t>(c)] = a > 0.0 ? std::conj(d) / a : cplx(1.0, 0.0);
        for (int r = 0; r < dim; ++r)
            g.at(r, c) *= diag_phase[static_cast<std::size_t>(c)];
    }
    return g;
}

AlgebraElement random_hermitian_element(const BlockAlgebra &alg, std::uint64_t seed) {
    rng::Stream s(seed);
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(alg.block_dims.size());
    for (int d : alg.block_dims)
        blocks.push_back(hermitize(gaussian_matrix(d, s)).matrix());
    return AlgebraElement(alg, std::move(blocks));
}

AlgebraElement random_element(const BlockAlgebra &alg, std::uint64_t seed) {
    rng::Stream s(seed);
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(alg.block_dims.size());
    for (int d : alg.block_dims)
        blocks.push_back(gaussian_matrix(d, s));
    return AlgebraElement(alg, std::move(blocks));
}

AlgebraElement random_positive_element(const BlockAlgebra &alg, std::uint64_t seed) {
    rng::Stream s(seed);
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(alg.block_dims.size());
    double total = 0.0;
    for (int d : alg.block_dims) {
        const ComplexMatrix g = gaussian_matrix(d, s);
        blocks.push_back(g * g.adjoint());
        total += blocks.back().trace().real();
    }
    for (auto &b : blocks)
        b *= cplx(1.0 / total, 0.0);
    return AlgebraElement(alg, std::move(blocks));
}

AlgebraElement random_phi_density(const TracialMap &map, std::uint64_t seed) {
    return make_phi_density(map, seed);
}

TracialMap random_tracial_map(const BlockAlgebra &domain, MapKind kind, int k, std::uint64_t seed,
                              int composite_codomain_dim) {
    rng::Stream s(seed);
    switch (kind) {
    case MapKind::UsualTrace:
        return TracialMap::usual_trace(domain);
    case MapKind::CenterExpectation:
        return TracialMap::center_expectation(domain);
    case MapKind::ScaledBlockTrace:
    case MapKind::Composite: {
        if (k < 1)
            throw DomainError("random_tracial_map: k must be >= 1");
        const int nb = domain.num_blocks();
        std::vector<std::vector<double>> coeffs(static_cast<std::size_t>(k));
        for (auto &row : coeffs) {
            row.resize(static_cast<std::size_t>(nb));
            double weighted = 0.0;
            for (int i = 0; i < nb; ++i) {
                row[static_cast<std::size_t>(i)] = std::abs(s.next_gaussian()) + 1e-3;
                weighted += row[static_cast<std::size_t>(i)] * domain.block_dims[static_cast<std::size_t>(i)];
            }
            for (double &c : row)
                c /= weighted; // unital row
        }
        if (kind == MapKind::ScaledBlockTrace)
            return TracialMap::scaled_block_trace(domain, std::move(coeffs));

        const int m = composite_codomain_dim;
        if (m < 1)
            throw DomainError("random_tracial_map: composite codomain dim must be >= 1");
        const BlockAlgebra codomain = BlockAlgebra::single(m);
        std::vector<ComplexMatrix> raw;
        raw.reserve(static_cast<std::size_t>(k));
        ComplexMatrix total(m);
        for (int j = 0; j < k; ++j) {
            const ComplexMatrix g = gaussian_matrix(m, s);
            raw.push_back(g * g.adjoint());
            total += raw.back();
        }
        // Normalize so the targets sum to the identity.
        const HermitianMatrix s_ihalf = matrix_power(hermitize(total), -0.5);
        std::vector<AlgebraElement> targets;
        targets.reserve(raw.size());
        for (const auto &q : raw)
            targets.push_back(
                AlgebraElement::from_matrix(hermitize(s_ihalf.matrix() * q * s_ihalf.matrix()).matrix()));
        return TracialMap::composite(domain, std::move(coeffs),
                                     PositiveAssignment(codomain, std::move(targets)));
    }
    }
    throw DomainError("random_tracial_map: unknown kind");
}

void InstanceSpec::validate() const {
    if (trials < 1)
        throw ConfigError("trials must be >= 1");
    if (block_dims.empty())
        throw ConfigError("block_dims must be nonempty");
    for (int d : block_dims)
        if (d < 1)
            throw ConfigError("block dimensions must be >= 1");
    if (map_rows < 1)
        throw ConfigError("map rows (k) must be >= 1");
    for (double a : alpha_grid)
        if (!(a >= 0.0 && a <= 1.0))
            throw ConfigError("alpha grid entries must lie in [0, 1]");
}

std::vector<double> InstanceSpec::default_alpha_grid() {
    // Endpoint-inclusive grid plus the midpoint; endpoints are only used
    // against invertible rho.
    return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
}

} // namespace uncert
