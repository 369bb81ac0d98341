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

#pragma once

#include <complex>
#include <span>

// Inner loops of the dense oracle (Frobenius inner products, residual
// accumulation, state overlaps) with a scalar reference implementation and an
// AVX2/FMA variant chosen at runtime. The scalar path is the definition; the
// vector path must agree with it to rounding.

namespace symsim::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

/// Best instruction set supported by the running CPU (and compiled in).
Isa detected_isa();
/// Instruction set used by the dispatching entry points below.
Isa active_isa();
/// Selects the instruction set; requests the CPU cannot run fall back to Scalar.
/// Returns the instruction set actually selected.
Isa set_isa(Isa isa);
const char *isa_name(Isa isa);

/// sum_k conj(a_k) b_k. Spans must have equal length.
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
/// y += alpha * x.
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
/// sum_k |x_k|^2.
double norm_sq(std::span<const cplx> x);

namespace scalar {
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
double norm_sq(std::span<const cplx> x);
}  // namespace scalar

namespace avx2 {
/// Compiled only on x86-64; calling these on a CPU without AVX2/FMA is undefined.
bool available();
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
double norm_sq(std::span<const cplx> x);
}  // namespace avx2

}  // namespace symsim::kernels
