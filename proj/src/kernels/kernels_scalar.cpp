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

namespace symsim::kernels::scalar {

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < a.size(); k++) {
        re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
        im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
    }
    return {re, im};
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    const double ar = alpha.real();
    const double ai = alpha.imag();
    for (std::size_t k = 0; k < x.size(); k++) {
        y[k] = {y[k].real() + ar * x[k].real() - ai * x[k].imag(), y[k].imag() + ar * x[k].imag() + ai * x[k].real()};
    }
}

double norm_sq(std::span<const cplx> x) {
    double total = 0.0;
    for (const auto &v : x) {
        total += v.real() * v.real() + v.imag() * v.imag();
    }
    return total;
}

}  // namespace symsim::kernels::scalar
