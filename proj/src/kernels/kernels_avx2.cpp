// Copyright 2026 The symsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symsim/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define SYMSIM_HAVE_AVX2 1
#endif

namespace symsim::kernels::avx2 {

#if defined(SYMSIM_HAVE_AVX2)

bool available() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

// Two complex doubles per __m256d: [re0 im0 re1 im1].

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    const auto *pa = reinterpret_cast<const double *>(a.data());
    const auto *pb = reinterpret_cast<const double *>(b.data());
    const std::size_t n = a.size();
    __m256d acc_re = _mm256_setzero_pd();  // [ar*br, ai*bi, ...]
    __m256d acc_im = _mm256_setzero_pd();  // [ar*bi, ai*br, ...]
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * k);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
        const __m256d vb_swap = _mm256_permute_pd(vb, 0b0101);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(va, vb_swap, acc_im);
    }
    alignas(32) double re_lanes[4];
    alignas(32) double im_lanes[4];
    _mm256_store_pd(re_lanes, acc_re);
    _mm256_store_pd(im_lanes, acc_im);
    double re = (re_lanes[0] + re_lanes[1]) + (re_lanes[2] + re_lanes[3]);
    double im = (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3]);
    for (; k < n; k++) {
        re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
        im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
    }
    return {re, im};
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    const auto *px = reinterpret_cast<const double *>(x.data());
    auto *py = reinterpret_cast<double *>(y.data());
    const std::size_t n = x.size();
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * k);
        const __m256d vx_swap = _mm256_permute_pd(vx, 0b0101);
        // [ar*xr - ai*xi, ar*xi + ai*xr]
        const __m256d prod = _mm256_fmaddsub_pd(ar, vx, _mm256_mul_pd(ai, vx_swap));
        _mm256_storeu_pd(py + 2 * k, _mm256_add_pd(_mm256_loadu_pd(py + 2 * k), prod));
    }
    for (; k < n; k++) {
        y[k] += alpha * x[k];
    }
}

double norm_sq(std::span<const cplx> x) {
    const auto *px = reinterpret_cast<const double *>(x.data());
    const std::size_t doubles = 2 * x.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= doubles; k += 4) {
        const __m256d v = _mm256_loadu_pd(px + k);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; k < doubles; k++) {
        total += px[k] * px[k];
    }
    return total;
}

#else

bool available() { return false; }
cplx dot(std::span<const cplx> a, std::span<const cplx> b) { return scalar::dot(a, b); }
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) { scalar::axpy(alpha, x, y); }
double norm_sq(std::span<const cplx> x) { return scalar::norm_sq(x); }

#endif

}  // namespace symsim::kernels::avx2
