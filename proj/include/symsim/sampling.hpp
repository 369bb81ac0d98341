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
#include <random>
#include <vector>

#include "symsim/dynamics.hpp"
#include "symsim/monomial.hpp"
#include "symsim/schur.hpp"

namespace symsim::sampling {

/// Random Hermitian operator with up to `max_terms` distinct monomials and
/// coefficients uniform in [-1, 1].
inline SymmetricOperator random_operator(int n, int max_terms, std::mt19937_64 &rng) {
    const auto basis = enumerate_monomials(n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    SymmetricOperator h(n);
    const int terms = count(rng);
    for (int t = 0; t < terms; t++) {
        h.add(basis[pick(rng)], coeff(rng));
    }
    return h;
}

inline MonomialIndex random_monomial(int n, std::mt19937_64 &rng) {
    const auto basis = enumerate_monomials(n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    return basis[pick(rng)];
}

/// Full-rank mixed state: normalized G G^dagger per block with Gaussian G.
inline BlockState random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    BlockOperator blocks(n);
    double trace = 0.0;
    for (const auto &lambda : enumerate_irreps(n)) {
        const int d = lambda.q_dim();
        Eigen::MatrixXcd a(d, d);
        for (int r = 0; r < d; r++) {
            for (int c = 0; c < d; c++) {
                a(r, c) = std::complex<double>(g(rng), g(rng));
            }
        }
        blocks.at(lambda) = a * a.adjoint();
        trace += blocks.at(lambda).trace().real();
    }
    for (const auto &lambda : enumerate_irreps(n)) {
        blocks.at(lambda) /= trace;
    }
    return BlockState(std::move(blocks));
}

}  // namespace symsim::sampling
