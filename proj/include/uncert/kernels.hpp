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

/**
 * @file
 * Low-level arithmetic kernels on interleaved complex<double> buffers.
 *
 * Every kernel ships a scalar reference implementation and, on x86-64, an
 * AVX2+FMA variant. The active set is chosen once at startup from cpu
 * detection and can be overridden via the UNCERT_KERNELS environment
 * variable ("auto" | "scalar" | "avx2") or force_isa() in tests. The two
 * variants are equivalence-tested against each other.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace uncert::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

/// Kernel function table. Buffers are dense, row-major, non-aliasing
/// unless a kernel says otherwise.
struct Ops {
    /// c = a * b for square n x n matrices. c must not alias a or b.
    void (*matmul)(const cplx *a, const cplx *b, cplx *c, int n);
    /// y = alpha * x + beta * y, elementwise over len entries.
    void (*axpby)(cplx alpha, const cplx *x, cplx beta, cplx *y, std::size_t len);
    /// sum of |x_i|^2.
    double (*norm2sq)(const cplx *x, std::size_t len);
};

/// The dispatched kernel table.
const Ops &active();

Isa active_isa();
std::string_view isa_name(Isa isa);

/// True when the running cpu supports the AVX2+FMA variants.
bool avx2_supported();

/// Force a specific variant (test hook). Throws uncert::ConfigError if the
/// requested variant is not supported on this cpu.
void force_isa(Isa isa);

/// Reference and vectorized tables, for equivalence tests.
const Ops &scalar_ops();
const Ops *avx2_ops(); // nullptr when unavailable at build or run time

} // namespace uncert::kernels
