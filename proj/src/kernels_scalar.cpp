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

#include "uncert/kernels.hpp"

namespace uncert::kernels {
namespace {

void matmul_scalar(const cplx *a, const cplx *b, cplx *c, int n) {
    for (int i = 0; i < n; ++i) {
        cplx *crow = c + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j)
            crow[j] = cplx(0.0, 0.0);
        for (int k = 0; k < n; ++k) {
            const cplx aik = a[static_cast<std::size_t>(i) * n + k];
            const cplx *brow = b + static_cast<std::size_t>(k) * n;
            for (int j = 0; j < n; ++j)
                crow[j] += aik * brow[j];
        }
    }
}

void axpby_scalar(cplx alpha, const cplx *x, cplx beta, cplx *y, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        y[i] = alpha * x[i] + beta * y[i];
}

double norm2sq_scalar(const cplx *x, std::size_t len) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i)
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

} // namespace

const Ops &scalar_ops() {
    static const Ops table{&matmul_scalar, &axpby_scalar, &norm2sq_scalar};
    return table;
}

} // namespace uncert::kernels
