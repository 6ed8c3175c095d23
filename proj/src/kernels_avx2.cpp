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

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace uncert::kernels {
namespace {

// One __m256d holds two interleaved complex<double>: [re0 im0 re1 im1].
// Complex product s*v with a broadcast scalar s=(sr,si):
//   even lanes: sr*re - si*im, odd lanes: sr*im + si*re
// which is exactly fmaddsub(sr, v, si*swap(v)).
inline __m256d cmul_bcast(__m256d s_re, __m256d s_im, __m256d v) {
    const __m256d v_swap = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(s_re, v, _mm256_mul_pd(s_im, v_swap));
}

inline __m128d cmul_bcast128(__m128d s_re, __m128d s_im, __m128d v) {
    const __m128d v_swap = _mm_permute_pd(v, 0b01);
    return _mm_fmaddsub_pd(s_re, v, _mm_mul_pd(s_im, v_swap));
}

void matmul_avx2(const cplx *a, const cplx *b, cplx *c, int n) {
    const double *bd = reinterpret_cast<const double *>(b);
    double *cd = reinterpret_cast<double *>(c);
    const int vec_j = n & ~1; // pairs of complex entries per row
    for (int i = 0; i < n; ++i) {
        double *crow = cd + 2 * static_cast<std::size_t>(i) * n;
        for (int j = 0; j < vec_j; j += 2)
            _mm256_storeu_pd(crow + 2 * j, _mm256_setzero_pd());
        if (vec_j < n)
            _mm_storeu_pd(crow + 2 * vec_j, _mm_setzero_pd());
        for (int k = 0; k < n; ++k) {
            const cplx aik = a[static_cast<std::size_t>(i) * n + k];
            const __m256d s_re = _mm256_set1_pd(aik.real());
            const __m256d s_im = _mm256_set1_pd(aik.imag());
            const double *brow = bd + 2 * static_cast<std::size_t>(k) * n;
            for (int j = 0; j < vec_j; j += 2) {
                const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
                const __m256d acc = _mm256_loadu_pd(crow + 2 * j);
                _mm256_storeu_pd(crow + 2 * j,
                                 _mm256_add_pd(acc, cmul_bcast(s_re, s_im, bv)));
            }
            if (vec_j < n) {
                const __m128d bv = _mm_loadu_pd(brow + 2 * vec_j);
                const __m128d acc = _mm_loadu_pd(crow + 2 * vec_j);
                _mm_storeu_pd(crow + 2 * vec_j,
                              _mm_add_pd(acc, cmul_bcast128(_mm256_castpd256_pd128(s_re),
                                                            _mm256_castpd256_pd128(s_im), bv)));
            }
        }
    }
}

void axpby_avx2(cplx alpha, const cplx *x, cplx beta, cplx *y, std::size_t len) {
    const double *xd = reinterpret_cast<const double *>(x);
    double *yd = reinterpret_cast<double *>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const __m256d br = _mm256_set1_pd(beta.real());
    const __m256d bi = _mm256_set1_pd(beta.imag());
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i,
                         _mm256_add_pd(cmul_bcast(ar, ai, xv), cmul_bcast(br, bi, yv)));
    }
    for (; i < len; ++i)
        y[i] = alpha * x[i] + beta * y[i];
}

double norm2sq_avx2(const cplx *x, std::size_t len) {
    const double *xd = reinterpret_cast<const double *>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        const __m256d v = _mm256_loadu_pd(xd + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < len; ++i)
        total += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return total;
}

} // namespace

const Ops *avx2_ops() {
    static const Ops table{&matmul_avx2, &axpby_avx2, &norm2sq_avx2};
    return &table;
}

} // namespace uncert::kernels

#else

namespace uncert::kernels {
const Ops *avx2_ops() { return nullptr; }
} // namespace uncert::kernels

#endif
