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
#include "uncert/spectral.hpp"

using namespace uncert;

namespace {

HermitianMatrix random_psd(int dim, std::uint64_t seed) {
    const ComplexMatrix g = random_complex(dim, seed);
    return hermitize(g * g.adjoint());
}

HermitianMatrix random_definite(int dim, std::uint64_t seed) {
    ComplexMatrix m = random_psd(dim, seed).matrix();
    for (int i = 0; i < dim; ++i)
        m.at(i, i) += 0.5;
    return hermitize(m);
}

} // namespace

TEST_CASE("eig_hermitian on known spectra") {
    const Spectrum id3 = eig_hermitian(HermitianMatrix::identity(3));
    for (double w : id3.eigenvalues)
        CHECK(w == doctest::Approx(1.0));

    const Spectrum sz = eig_hermitian(hermitize(oracle::sigma_z()));
    CHECK(sz.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(sz.eigenvalues[1] == doctest::Approx(1.0));

    const Spectrum sx = eig_hermitian(hermitize(oracle::sigma_x()));
    const auto [lo, hi] = oracle::eig2x2(oracle::sigma_x());
    CHECK(sx.eigenvalues[0] == doctest::Approx(lo));
    CHECK(sx.eigenvalues[1] == doctest::Approx(hi));
}

TEST_CASE("eig_hermitian matches the 2x2 characteristic polynomial on random input") {
    for (int t = 0; t < 50; ++t) {
        const HermitianMatrix h = random_hermitian(2, 7000 + t);
        const Spectrum s = eig_hermitian(h);
        const auto [lo, hi] = oracle::eig2x2(h.matrix());
        CHECK(s.eigenvalues[0] == doctest::Approx(lo).epsilon(1e-12));
        CHECK(s.eigenvalues[1] == doctest::Approx(hi).epsilon(1e-12));
    }
}

TEST_CASE("spectral reconstruction invariant") {
    for (int dim : {2, 3, 5, 8}) {
        const HermitianMatrix h = random_hermitian(dim, 40 + dim);
        const Spectrum s = eig_hermitian(h);
        ComplexMatrix scaled = s.eigenvectors;
        for (int c = 0; c < dim; ++c)
            for (int r = 0; r < dim; ++r)
                scaled.at(r, c) *= s.eigenvalues[static_cast<std::size_t>(c)];
        const ComplexMatrix recon = scaled * s.eigenvectors.adjoint();
        CHECK((recon - h.matrix()).frobenius_norm() <= 1e-10 * (1.0 + h.frobenius_norm()));
        for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
            CHECK(s.eigenvalues[i - 1] <= s.eigenvalues[i]);
    }
}

TEST_CASE("matrix_power closed forms") {
    const ComplexMatrix d49 = ComplexMatrix::from_rows({{cplx(4, 0), cplx(0, 0)}, {cplx(0, 0), cplx(9, 0)}});
    const HermitianMatrix root = matrix_power(hermitize(d49), 0.5);
    CHECK(root.at(0, 0).real() == doctest::Approx(2.0));
    CHECK(root.at(1, 1).real() == doctest::Approx(3.0));

    // support-projection convention: 0^0 = 0
    ComplexMatrix d(3);
    d.at(0, 0) = 0.5;
    d.at(1, 1) = 0.5;
    const HermitianMatrix zeroth = matrix_power(hermitize(d), 0.0);
    CHECK(zeroth.at(0, 0).real() == doctest::Approx(1.0));
    CHECK(zeroth.at(1, 1).real() == doctest::Approx(1.0));
    CHECK(std::abs(zeroth.at(2, 2)) < 1e-14);

    const HermitianMatrix p = random_psd(4, 77);
    CHECK((matrix_power(p, 1.0).matrix() - p.matrix()).max_abs() < 1e-12 * (1.0 + p.max_abs()));
}

TEST_CASE("matrix_power error paths") {
    const HermitianMatrix indef = hermitize(oracle::sigma_z());
    CHECK_THROWS_AS(matrix_power(indef, 0.5), DomainError);

    ComplexMatrix sing(2);
    sing.at(0, 0) = 1.0;
    CHECK_THROWS_AS(matrix_power(hermitize(sing), -1.0), DomainError);
    CHECK_NOTHROW(matrix_power(random_definite(3, 3), -1.0));
}

TEST_CASE("square root round trip, against the iterative oracle and by squaring") {
    for (int dim = 2; dim <= 8; ++dim) {
        const HermitianMatrix p = random_psd(dim, 500 + dim);
        const HermitianMatrix root = matrix_power(p, 0.5);
        const HermitianMatrix back = matrix_power(root, 2.0);
        CHECK((back.matrix() - p.matrix()).frobenius_norm() <= 1e-8 * (1.0 + p.frobenius_norm()));

        const HermitianMatrix pd = random_definite(dim, 900 + dim);
        const ComplexMatrix ns = oracle::newton_schulz_sqrt(pd.matrix());
        const HermitianMatrix spectral = matrix_power(pd, 0.5);
        CHECK((ns - spectral.matrix()).frobenius_norm() <= 1e-9 * (1.0 + spectral.frobenius_norm()));
    }
}

TEST_CASE("fractional powers multiply: P^a P^(1-a) = P for definite P") {
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const HermitianMatrix p = random_definite(4, static_cast<std::uint64_t>(alpha * 1000));
        const ComplexMatrix prod = matrix_power(p, alpha).matrix() * matrix_power(p, 1.0 - alpha).matrix();
        CHECK((prod - p.matrix()).frobenius_norm() <= 1e-8 * (1.0 + p.frobenius_norm()));
    }
}

TEST_CASE("matrix_abs closed forms") {
    const ComplexMatrix d = ComplexMatrix::from_rows({{cplx(-3, 0), cplx(0, 0)}, {cplx(0, 0), cplx(2, 0)}});
    const HermitianMatrix abs_d = matrix_abs(d);
    CHECK(abs_d.at(0, 0).real() == doctest::Approx(3.0));
    CHECK(abs_d.at(1, 1).real() == doctest::Approx(2.0));

    const ComplexMatrix isz = oracle::sigma_z() * cplx(0, 1);
    CHECK((matrix_abs(isz).matrix() - ComplexMatrix::identity(2)).max_abs() < 1e-12);

    CHECK(matrix_abs(ComplexMatrix(3)).matrix().max_abs() == 0.0);
}

TEST_CASE("geometric mean closed forms and properties") {
    // commuting case: entrywise sqrt(ab)
    ComplexMatrix a1(1), b1(1);
    a1.at(0, 0) = 4.0;
    b1.at(0, 0) = 9.0;
    CHECK(geometric_mean(hermitize(a1), hermitize(b1)).at(0, 0).real() == doctest::Approx(6.0));

    const HermitianMatrix a = random_definite(3, 31);
    CHECK((geometric_mean(a, a).matrix() - a.matrix()).frobenius_norm() <
          1e-9 * (1.0 + a.frobenius_norm()));

    const HermitianMatrix b = random_psd(3, 32);
    const HermitianMatrix mean_ib = geometric_mean(HermitianMatrix::identity(3), b);
    CHECK((mean_ib.matrix() - matrix_power(b, 0.5).matrix()).frobenius_norm() <
          1e-8 * (1.0 + b.frobenius_norm()));

    ComplexMatrix indef(3);
    indef.at(0, 0) = 1.0;
    indef.at(1, 1) = -1.0;
    indef.at(2, 2) = 1.0;
    CHECK_THROWS_AS(geometric_mean(a, hermitize(indef)), DomainError);
}

TEST_CASE("geometric mean is symmetric for definite pairs") {
    for (int t = 0; t < 20; ++t) {
        const HermitianMatrix a = random_definite(3, 3100 + t);
        const HermitianMatrix b = random_definite(3, 3200 + t);
        const HermitianMatrix ab = geometric_mean(a, b);
        const HermitianMatrix ba = geometric_mean(b, a);
        const double scale = std::max(spectral_norm(a), spectral_norm(b));
        CHECK((ab.matrix() - ba.matrix()).frobenius_norm() <= 1e-8 * (1.0 + scale));
    }
}

TEST_CASE("geometric mean maximality certificate: [[A, G],[G, B]] is PSD") {
    for (int t = 0; t < 20; ++t) {
        const HermitianMatrix a = random_definite(3, 3300 + t);
        const HermitianMatrix b = random_definite(3, 3400 + t);
        const HermitianMatrix g = geometric_mean(a, b);
        CHECK(schur_positivity_check(a, g.matrix(), b));
    }
}

TEST_CASE("geometric mean regularizes a semidefinite first operand") {
    ComplexMatrix sing(2);
    sing.at(0, 0) = 1.0; // rank-one
    GeomMeanInfo info;
    const HermitianMatrix m =
        geometric_mean(hermitize(sing), HermitianMatrix::identity(2), Tolerance{}, &info);
    CHECK(info.regularized);
    CHECK(info.epsilon > 0.0);
    CHECK(m.matrix().all_finite());
}

TEST_CASE("loewner_geq margins") {
    const HermitianMatrix i2 = HermitianMatrix::identity(2);
    const HermitianMatrix two = hermitize(ComplexMatrix::identity(2) * cplx(2, 0));
    CHECK(loewner_geq(two, i2) == doctest::Approx(1.0));

    const ComplexMatrix d13 = ComplexMatrix::from_rows({{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(3, 0)}});
    const ComplexMatrix d21 = ComplexMatrix::from_rows({{cplx(2, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}});
    CHECK(loewner_geq(hermitize(d13), hermitize(d21)) == doctest::Approx(-1.0));

    const HermitianMatrix h = random_hermitian(4, 9);
    CHECK(loewner_geq(h, h) == doctest::Approx(0.0));
}

TEST_CASE("spectrum_interval") {
    const auto [lo, hi] = spectrum_interval(hermitize(oracle::sigma_z()));
    CHECK(lo == doctest::Approx(-1.0));
    CHECK(hi == doctest::Approx(1.0));

    const auto [a, b] = spectrum_interval(HermitianMatrix::identity(4));
    CHECK(a == doctest::Approx(1.0));
    CHECK(b == doctest::Approx(1.0));

    const auto [c, d] = spectrum_interval(hermitize(oracle::sigma_x()));
    CHECK(c == doctest::Approx(-1.0));
    CHECK(d == doctest::Approx(1.0));
}

TEST_CASE("schur_positivity_check scalar cases") {
    ComplexMatrix a(1), x(1), b(1);
    a.at(0, 0) = 2.0;
    x.at(0, 0) = 1.0;
    b.at(0, 0) = 1.0;
    CHECK(schur_positivity_check(hermitize(a), x, hermitize(b))); // 1 >= 0.5

    a.at(0, 0) = 1.0;
    x.at(0, 0) = 2.0;
    CHECK_FALSE(schur_positivity_check(hermitize(a), x, hermitize(b))); // 1 < 4

    CHECK(schur_positivity_check(HermitianMatrix::identity(2), ComplexMatrix(2),
                                 HermitianMatrix::zero(2)));

    ComplexMatrix sing(2);
    sing.at(0, 0) = 1.0;
    CHECK_THROWS_AS(
        schur_positivity_check(hermitize(sing), ComplexMatrix(2), HermitianMatrix::identity(2)),
        DomainError);
}

TEST_CASE("schur dual routes agree on 1000 random triples") {
    int positives = 0, negatives = 0;
    for (int t = 0; t < 1000; ++t) {
        const int dim = 1 + static_cast<int>(rng::mix64(static_cast<std::uint64_t>(t)) % 5);
        const HermitianMatrix a = random_definite(dim, 10000 + static_cast<std::uint64_t>(t));
        const ComplexMatrix x = random_complex(dim, 20000 + static_cast<std::uint64_t>(t));
        const HermitianMatrix b =
            (t % 2 == 0) ? random_psd(dim, 30000 + static_cast<std::uint64_t>(t))
                         : random_hermitian(dim, 30000 + static_cast<std::uint64_t>(t));
        SchurCheckInfo info;
        // Any route disagreement throws NumericalError and fails the test.
        const bool verdict = schur_positivity_check(a, x, b, Tolerance{}, &info);
        (verdict ? positives : negatives)++;
        if (std::abs(info.schur_margin) > 1e-10 && std::abs(info.block_margin) > 1e-10)
            CHECK((info.schur_margin > 0) == (info.block_margin > 0));
    }
    // both verdicts must actually occur for the check to mean anything
    CHECK(positives > 0);
    CHECK(negatives > 0);
}
