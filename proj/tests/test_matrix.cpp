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

TEST_CASE("hermitize fixes already-Hermitian input") {
    const ComplexMatrix d = ComplexMatrix::from_rows({{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(2, 0)}});
    CHECK((hermitize(d).matrix() - d).max_abs() == 0.0);
}

TEST_CASE("hermitize averages with the adjoint") {
    const ComplexMatrix m = ComplexMatrix::from_rows({{cplx(0, 0), cplx(1, 0)}, {cplx(0, 0), cplx(0, 0)}});
    const ComplexMatrix want =
        ComplexMatrix::from_rows({{cplx(0, 0), cplx(0.5, 0)}, {cplx(0.5, 0), cplx(0, 0)}});
    CHECK((hermitize(m).matrix() - want).max_abs() < 1e-15);

    const ComplexMatrix u = ComplexMatrix::from_rows({{cplx(1, 0), cplx(0, 1)}, {cplx(0, 0), cplx(1, 0)}});
    const ComplexMatrix want2 =
        ComplexMatrix::from_rows({{cplx(1, 0), cplx(0, 0.5)}, {cplx(0, -0.5), cplx(1, 0)}});
    CHECK((hermitize(u).matrix() - want2).max_abs() < 1e-15);
}

TEST_CASE("HermitianMatrix constructor rejects asymmetric input") {
    const ComplexMatrix m = ComplexMatrix::from_rows({{cplx(0, 0), cplx(1, 0)}, {cplx(0, 0), cplx(0, 0)}});
    CHECK_THROWS_AS(HermitianMatrix{m}, DomainError);
}

TEST_CASE("commutator closed forms") {
    const ComplexMatrix sx = oracle::sigma_x();
    const ComplexMatrix sy = oracle::sigma_y();
    const ComplexMatrix sz = oracle::sigma_z();

    // [sx, sy] = 2i sz by Pauli multiplication
    const ComplexMatrix c = commutator(sx, sy);
    CHECK((c - sz * cplx(0, 2)).max_abs() < 1e-15);
    CHECK(commutator(sx, sx).max_abs() == 0.0);
    CHECK(commutator(sx, ComplexMatrix::identity(2)).max_abs() == 0.0);
}

TEST_CASE("commutator of Hermitian operands is anti-Hermitian") {
    for (int t = 0; t < 25; ++t) {
        const ComplexMatrix a = random_hermitian(4, 1000 + t).matrix();
        const ComplexMatrix b = random_hermitian(4, 2000 + t).matrix();
        const ComplexMatrix c = commutator(a, b);
        CHECK((c.adjoint() + c).max_abs() < 1e-13 * (1.0 + c.max_abs()));
    }
}

TEST_CASE("real and imaginary parts reconstitute the matrix") {
    const ComplexMatrix isz = oracle::sigma_z() * cplx(0, 1);
    CHECK(real_part(isz).matrix().max_abs() < 1e-15);
    CHECK((imaginary_part(isz).matrix() - oracle::sigma_z()).max_abs() < 1e-15);

    const HermitianMatrix h = random_hermitian(3, 5);
    CHECK((real_part(h.matrix()).matrix() - h.matrix()).max_abs() < 1e-15);

    const ComplexMatrix a = random_complex(4, 6);
    const ComplexMatrix re = real_part(a).matrix();
    const ComplexMatrix im = imaginary_part(a).matrix();
    CHECK((re + im * cplx(0, 1) - a).max_abs() < 1e-14);
}

TEST_CASE("matrix invariants and errors") {
    CHECK_THROWS_AS(ComplexMatrix(0), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix(2) + ComplexMatrix(3), DimensionError);
    CHECK_THROWS_AS(commutator(ComplexMatrix(2), ComplexMatrix(3)), DimensionError);
    CHECK_THROWS_AS((Tolerance{-1.0, 0.0}).validate(), DomainError);
    CHECK_NOTHROW(Tolerance{}.validate());
}

TEST_CASE("trace and norms") {
    const ComplexMatrix m = ComplexMatrix::from_rows({{cplx(1, 2), cplx(0, 0)}, {cplx(0, 0), cplx(3, -2)}});
    CHECK(m.trace() == cplx(4, 0));
    CHECK(m.frobenius_norm() == doctest::Approx(std::sqrt(1.0 + 4.0 + 9.0 + 4.0)));
    CHECK(m.max_abs() == doctest::Approx(std::sqrt(13.0)));
}
