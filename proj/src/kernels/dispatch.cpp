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

#include <atomic>
#include <stdexcept>

#include "symsim/kernels.hpp"

namespace symsim::kernels {

namespace {

std::atomic<Isa> &active() {
    static std::atomic<Isa> isa{detected_isa()};
    return isa;
}

void check_lengths(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument("kernel operands have different lengths");
    }
}

}  // namespace

Isa detected_isa() {
    static const Isa isa = avx2::available() ? Isa::Avx2 : Isa::Scalar;
    return isa;
}

Isa active_isa() { return active().load(); }

Isa set_isa(Isa isa) {
    if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) {
        isa = Isa::Scalar;
    }
    active().store(isa);
    return isa;
}

const char *isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    check_lengths(a.size(), b.size());
    return active_isa() == Isa::Avx2 ? avx2::dot(a, b) : scalar::dot(a, b);
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    check_lengths(x.size(), y.size());
    if (active_isa() == Isa::Avx2) {
        avx2::axpy(alpha, x, y);
    } else {
        scalar::axpy(alpha, x, y);
    }
}

double norm_sq(std::span<const cplx> x) {
    return active_isa() == Isa::Avx2 ? avx2::norm_sq(x) : scalar::norm_sq(x);
}

}  // namespace symsim::kernels
