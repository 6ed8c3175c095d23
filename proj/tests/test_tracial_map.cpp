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

#include <doctest.h>

#include "oracles.hpp"
#include "uncert/random.hpp"

using namespace uncert;

namespace {

std::vector<TracialMap> builtin_maps(const BlockAlgebra &alg, std::uint64_t seed) {
    return {
        TracialMap::usual_trace(alg),
        random_tracial_map(alg, MapKind::ScaledBlockTrace, 2, seed),
        TracialMap::center_expectation(alg),
        random_tracial_map(alg, MapKind::Composite, 3, seed + 1, 3),
    };
}

} // namespace

TEST_CASE("apply: closed forms") {
    const BlockAlgebra m2 = BlockAlgebra::single(2);
    const TracialMap ce = TracialMap::center_expectation(m2);
    const AlgebraElement sz = AlgebraElement::from_matrix(oracle::sigma_z());
    CHECK(element_spectral_norm(ce.apply(sz)) < 1e-15); // tr(sigma_z) = 0

    const TracialMap ut = TracialMap::usual_trace(m2);
    const AlgebraElement rho = AlgebraElement::from_matrix(oracle::qubit_density(0.75));
    CHECK(ut.apply(rho).scalar_value().real() == doctest::Approx(1.0));

    for (const auto &map : builtin_maps(BlockAlgebra({2, 3}), 11)) {
        if (!map.is_unital())
            continue;
        const AlgebraElement img = map.apply(AlgebraElement::identity(map.domain()));
        CHECK(element_spectral_norm(img - AlgebraElement::identity(map.codomain())) < 1e-10);
    }
}

TEST_CASE("apply is linear and adjoint-preserving") {
    const BlockAlgebra alg({2, 3});
    for (const auto &map : builtin_maps(alg, 17)) {
        for (int t = 0; t < 10; ++t) {
            const AlgebraElement x = random_element(alg, 1200 + static_cast<std::uint64_t>(t));
            const AlgebraElement y = random_element(alg, 1300 + static_cast<std::uint64_t>(t));
            const cplx lambda(1.3, -0.4);
            const AlgebraElement lin =
                map.apply(x + lambda * y) - (map.apply(x) + lambda * map.apply(y));
            CHECK(element_spectral_norm(lin) < 1e-12 * (1.0 + element_spectral_norm(map.apply(x))));
            const AlgebraElement star = map.apply(x.adjoint()) - map.apply(x).adjoint();
            CHECK(element_spectral_norm(star) < 1e-12 * (1.0 + element_spectral_norm(map.apply(x))));
        }
    }
}

TEST_CASE("check_tracial: exact for the block-trace model") {
    const BlockAlgebra alg({2, 3});
    for (const auto &map : builtin_maps(alg, 21)) {
        const double dev = check_tracial(map, 50, 5);
        CHECK(dev <= 1e-12 * (1.0 + 50.0)); // traces cancel to roundoff
    }
    CHECK_THROWS_AS(check_tracial(TracialMap::usual_trace(alg), 0, 1), DomainError);
}

TEST_CASE("check_positive_unital") {
    const BlockAlgebra alg({2, 3});
    const auto [ok_ce, defect_ce] = check_positive_unital(TracialMap::center_expectation(alg), 50, 7);
    CHECK(ok_ce);
    CHECK(defect_ce <= 1e-12);

    const TracialMap comp = random_tracial_map(alg, MapKind::Composite, 2, 33);
    const auto [ok_comp, defect_comp] = check_positive_unital(comp, 50, 8);
    CHECK(ok_comp);
    CHECK(defect_comp <= 1e-10);

    // A negative coefficient (test-only construction) must be caught.
    const TracialMap bad =
        TracialMap::scaled_block_trace_unchecked(alg, {{-0.2, 0.5}});
    const auto [ok_bad, defect_bad] = check_positive_unital(bad, 50, 9);
    CHECK_FALSE(ok_bad);
    (void)defect_bad;

    CHECK_THROWS_AS(TracialMap::scaled_block_trace(alg, {{-0.2, 0.5}}), DomainError);
}

TEST_CASE("module property: 500 samples across kinds on [3,3]") {
    const BlockAlgebra alg({3, 3});
    for (const auto &map : builtin_maps(alg, 99)) {
        CHECK(check_tracial(map, 125, 1) <= 1e-9 * (1.0 + 50.0));
        const auto [positive, defect] = check_positive_unital(map, 125, 2);
        CHECK(positive);
        if (map.kind() != MapKind::UsualTrace)
            CHECK(defect <= 1e-9);
    }
}

TEST_CASE("make_phi_density per kind") {
    const BlockAlgebra alg({2, 3});

    const TracialMap ut = TracialMap::usual_trace(alg);
    const AlgebraElement rho_ut = make_phi_density(ut, 41);
    CHECK(rho_ut.trace().real() == doctest::Approx(1.0));
    CHECK(is_phi_density(ut, rho_ut));

    const TracialMap ce = TracialMap::center_expectation(alg);
    const AlgebraElement rho_ce = make_phi_density(ce, 42);
    CHECK(rho_ce.block(0).trace().real() == doctest::Approx(2.0));
    CHECK(rho_ce.block(1).trace().real() == doctest::Approx(3.0));
    CHECK(is_phi_density(ce, rho_ce));

    for (const auto &map : builtin_maps(alg, 43)) {
        const AlgebraElement rho = make_phi_density(map, 44);
        CHECK(is_phi_density(map, rho));
    }

    const TracialMap infeasible = TracialMap::scaled_block_trace(alg, {{0.0, 0.0}});
    CHECK_THROWS_AS(make_phi_density(infeasible, 45), FeasibilityError);
}

TEST_CASE("is_phi_density closed cases") {
    const BlockAlgebra m2 = BlockAlgebra::single(2);
    const TracialMap ut = TracialMap::usual_trace(m2);
    CHECK(is_phi_density(ut, AlgebraElement::from_matrix(oracle::qubit_density(0.5))));
    ComplexMatrix off(2);
    off.at(0, 0) = 0.7;
    off.at(1, 1) = 0.7;
    CHECK_FALSE(is_phi_density(ut, AlgebraElement::from_matrix(off))); // trace 1.4

    // sigma_x + I: PSD with eigenvalues {0, 2}, trace 2 => CE-density on M_2
    const TracialMap ce = TracialMap::center_expectation(m2);
    const AlgebraElement elem =
        AlgebraElement::from_matrix(oracle::sigma_x() + ComplexMatrix::identity(2));
    CHECK(is_phi_density(ce, elem));
}

TEST_CASE("conjugation") {
    const BlockAlgebra alg({2, 3});
    const TracialMap ce = TracialMap::center_expectation(alg);

    // U = I leaves the map untouched
    const TracialMap same = ce.conjugate({ComplexMatrix::identity(2), ComplexMatrix::identity(3)});
    const AlgebraElement x = random_hermitian_element(alg, 3);
    CHECK(element_spectral_norm(same.apply(x) - ce.apply(x)) < 1e-14);

    // center expectation is basis-free on traces
    const std::vector<ComplexMatrix> u{random_unitary(2, 10), random_unitary(3, 11)};
    const TracialMap conj = ce.conjugate(u);
    CHECK(element_spectral_norm(conj.apply(x) - ce.apply(x)) < 1e-12 * (1.0 + element_spectral_norm(x)));

    // composite stays tracial under conjugation
    const TracialMap comp = random_tracial_map(alg, MapKind::Composite, 2, 51).conjugate(u);
    CHECK(check_tracial(comp, 40, 6) <= 1e-9 * (1.0 + 50.0));

    // non-unitary blocks are rejected
    CHECK_THROWS_AS(ce.conjugate({ComplexMatrix::identity(2) * cplx(2.0, 0), ComplexMatrix::identity(3)}),
                    DomainError);
}

TEST_CASE("center expectation bimodule property with central factors") {
    const BlockAlgebra alg({2, 3});
    const TracialMap ce = TracialMap::center_expectation(alg);
    rng::Stream s(77);
    for (int t = 0; t < 20; ++t) {
        // random central elements: scalar per block
        AlgebraElement b = AlgebraElement::identity(alg);
        AlgebraElement c = AlgebraElement::identity(alg);
        for (int i = 0; i < alg.num_blocks(); ++i) {
            b.block(i) *= cplx(s.next_gaussian(), s.next_gaussian());
            c.block(i) *= cplx(s.next_gaussian(), s.next_gaussian());
        }
        const AlgebraElement x = random_element(alg, 800 + static_cast<std::uint64_t>(t));
        const AlgebraElement lhs = ce.apply(b * x * c);
        const AlgebraElement rhs = b * ce.apply(x) * c;
        CHECK(element_spectral_norm(lhs - rhs) < 1e-11 * (1.0 + element_spectral_norm(rhs)));
        CHECK(element_spectral_norm(ce.apply(b * x) - b * ce.apply(x)) <
              1e-11 * (1.0 + element_spectral_norm(rhs)));
    }
}

TEST_CASE("scaled block trace has exactly commutative range") {
    const BlockAlgebra alg({2, 3});
    const TracialMap sbt = random_tracial_map(alg, MapKind::ScaledBlockTrace, 3, 5);
    for (int t = 0; t < 10; ++t) {
        const AlgebraElement x = sbt.apply(random_element(alg, 600 + static_cast<std::uint64_t>(t)));
        const AlgebraElement y = sbt.apply(random_element(alg, 700 + static_cast<std::uint64_t>(t)));
        CHECK(element_spectral_norm(x * y - y * x) == 0.0); // 1x1 blocks commute exactly
    }
}

TEST_CASE("factorization reproduces the map") {
    const BlockAlgebra alg({2, 3});
    for (const auto &map : builtin_maps(alg, 61)) {
        const MapFactorization f = map.factorize();
        for (int t = 0; t < 10; ++t) {
            const AlgebraElement x = random_element(alg, 900 + static_cast<std::uint64_t>(t));
            const AlgebraElement via_factors = f.phi2.apply(f.phi1.apply(x));
            AlgebraElement direct = map.apply(x);
            if (map.kind() == MapKind::CenterExpectation) {
                // factorized codomain agrees through central coefficients
                const auto lhs = central_coefficients(via_factors);
                const auto rhs = central_coefficients(direct);
                for (std::size_t i = 0; i < lhs.size(); ++i)
                    CHECK(std::abs(lhs[i] - rhs[i]) < 1e-12 * (1.0 + std::abs(rhs[i])));
            } else {
                CHECK(element_spectral_norm(via_factors - direct) <
                      1e-12 * (1.0 + element_spectral_norm(direct)));
            }
        }
        CHECK(f.assignment.unital_defect() <= 1e-9);
    }
}

TEST_CASE("dilation contract") {
    const BlockAlgebra alg({2, 3});
    for (const auto &map : builtin_maps(alg, 71)) {
        const TracialMap dil = dilate(map);
        const AlgebraElement x = random_element(alg, 1000);
        const AlgebraElement y = random_element(alg, 1001);
        // Phi~(diag(x, y)) = Phi(x + y) / 2
        AlgebraElement stacked = AlgebraElement::zero(dil.domain());
        for (int b = 0; b < alg.num_blocks(); ++b) {
            const int n = alg.block_dims[static_cast<std::size_t>(b)];
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    stacked.block(b).at(r, c) = x.block(b).at(r, c);
                    stacked.block(b).at(n + r, n + c) = y.block(b).at(r, c);
                }
        }
        AlgebraElement expect = map.apply(x) + map.apply(y);
        expect *= cplx(0.5, 0.0);
        const AlgebraElement got = dil.apply(stacked);
        if (map.kind() == MapKind::CenterExpectation) {
            const auto lhs = central_coefficients(got);
            const auto rhs = central_coefficients(expect);
            for (std::size_t i = 0; i < lhs.size(); ++i)
                CHECK(std::abs(lhs[i] - rhs[i]) < 1e-12 * (1.0 + std::abs(rhs[i])));
        } else {
            CHECK(element_spectral_norm(got - expect) < 1e-12 * (1.0 + element_spectral_norm(expect)));
        }
    }

    // dilate_offdiag builds a self-adjoint element
    const AlgebraElement a = random_element(alg, 1002);
    CHECK(dilate_offdiag(a).hermitian_defect() < 1e-15);
}
