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

#include "symsim/dynamics.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "symsim/error.hpp"
#include "symsim/oracle.hpp"
#include "test_util.hpp"

using namespace symsim;
using cplx = std::complex<double>;

namespace {

double max_diff(const BlockOperator &a, const BlockOperator &b) {
    double worst = 0.0;
    for (std::size_t l = 0; l < a.num_blocks(); l++) {
        worst = std::max(worst, (a[static_cast<int>(l)] - b[static_cast<int>(l)]).cwiseAbs().maxCoeff());
    }
    return worst;
}

using test_support::random_state;

}  // namespace

TEST(block_state, validation) {
    BlockOperator bad(2);
    bad[0](0, 0) = 0.5;
    ASSERT_THROW(BlockState{bad}, ValidationError);  // trace 0.5
    bad[1](0, 0) = 0.5;
    ASSERT_NO_THROW(BlockState{bad});
    bad[0](0, 0) = -0.5;
    bad[1](0, 0) = 1.5;
    ASSERT_THROW(BlockState{bad}, ValidationError);  // negative eigenvalue
    BlockOperator skew(2);
    skew[1](0, 0) = 1.0;
    skew[0](0, 1) = 0.1;
    ASSERT_THROW(BlockState{skew}, ValidationError);
    ASSERT_THROW(LabeledSample(BlockState::mixed_on(2, {1, 1}), 0), ValidationError);
}

TEST(evolution, trivial_cases) {
    const auto h = heisenberg(4);
    ASSERT_LT(max_diff(evolution_from_hamiltonian(h, 0.0), BlockOperator::identity(4)), 1e-14);

    SymmetricOperator c(3);
    c.add({3, 0, 0, 0}, 0.7);
    const auto u = evolution_from_hamiltonian(c, 1.3);
    const cplx phase = std::exp(cplx(0.0, -0.7 * 1.3));
    for (const auto &lambda : enumerate_irreps(3)) {
        const int d = lambda.q_dim();
        ASSERT_LT((u.at(lambda) - phase * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(evolution, two_qubit_heisenberg) {
    const double t = std::numbers::pi / 4;
    const auto u = evolution_from_hamiltonian(heisenberg(2), t);
    ASSERT_LT(std::abs(u[1](0, 0) - std::exp(cplx(0.0, 3.0 * t))), 1e-12);
    ASSERT_LT((u[0] - std::exp(cplx(0.0, -t)) * Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(evolution, unitary_and_composes) {
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 12; n++) {
        const auto h = test_support::random_operator(n, 5, rng);
        const auto a = evolution_from_hamiltonian(h, 0.37);
        const auto b = evolution_from_hamiltonian(h, 1.1);
        ASSERT_LT(a.unitarity_deviation(), 1e-10);
        ASSERT_LT(max_diff(a * b, evolution_from_hamiltonian(h, 1.47)), 1e-10);
    }
}

TEST(unitary_from_coeffs, identity_and_rejection) {
    ComplexExpansion one(3);
    one.add({3, 0, 0, 0}, 1.0);
    ASSERT_LT(max_diff(unitary_from_coeffs(one), BlockOperator::identity(3)), 1e-15);

    ComplexExpansion two(3);
    two.add({3, 0, 0, 0}, 2.0);
    ASSERT_THROW(unitary_from_coeffs(two), NumericalError);
}

TEST(unitary_from_coeffs, expanded_exponential_matches) {
    // Expand exp(-iHt) in the monomial basis through the dense oracle, then
    // rebuild it from the coefficients.
    const auto h = heisenberg(2);
    const double t = 0.83;
    const auto dense_u = dense::dense_evolution(dense::dense_operator(h), t);
    const auto d = dense::decompose_invariant(dense_u);
    ASSERT_LT(d.residual, 1e-12);
    ASSERT_LT(max_diff(unitary_from_coeffs(d.coefficients), evolution_from_hamiltonian(h, t)), 1e-10);
}

TEST(expectation, identity_unitary) {
    const auto rho = BlockState::pure({1, 1}, Eigen::VectorXcd::Ones(1));
    SymmetricOperator xx(2);
    xx.add({0, 2, 0, 0}, 1.0);
    ASSERT_NEAR(expectation(xx, BlockOperator::identity(2), rho), -1.0, 1e-14);
}

TEST(expectation, energy_is_conserved) {
    std::mt19937_64 rng(37);
    for (int n = 2; n <= 10; n++) {
        const auto h = test_support::random_operator(n, 5, rng);
        const auto rho = random_state(n, rng);
        const double e0 = expectation(h, BlockOperator::identity(n), rho);
        for (double t : {0.1, 0.5, 2.0, 7.5}) {
            ASSERT_NEAR(expectation(h, evolution_from_hamiltonian(h, t), rho), e0, 1e-9);
        }
    }
}

TEST(expectation, matches_dense) {
    std::mt19937_64 rng(41);
    for (int n = 2; n <= 6; n++) {
        const auto h = test_support::random_operator(n, 4, rng);
        const auto o = test_support::random_operator(n, 4, rng);
        const auto rho = random_state(n, rng);
        const auto rho_dense = dense::embed_block_state(rho);
        ASSERT_NEAR(rho_dense.matrix.trace().real(), 1.0, 1e-12);
        for (double t : {0.0, 0.3, 1.7}) {
            ASSERT_NEAR(expectation(o, evolution_from_hamiltonian(h, t), rho),
                        dense::exact_expectation(o, h, t, rho_dense), 1e-8);
        }
    }
}

TEST(evolve_state, repeated_steps_stay_physical) {
    std::mt19937_64 rng(43);
    const int n = 8;
    const auto h = test_support::random_operator(n, 5, rng);
    const auto step = evolution_from_hamiltonian(h, 0.05);
    BlockState rho = random_state(n, rng);
    for (int k = 0; k < 100; k++) {
        rho = evolve_state(step, rho);
    }
    ASSERT_NEAR(rho.trace(), 1.0, 1e-9);
    ASSERT_GT(rho.min_eigenvalue(), -1e-9);
}

TEST(empirical_loss, sign_conventions) {
    const auto u = BlockOperator::identity(2);
    SymmetricOperator xx(2);
    xx.add({0, 2, 0, 0}, 1.0);
    const auto singlet = BlockState::pure({1, 1}, Eigen::VectorXcd::Ones(1));

    const std::vector<LabeledSample> one = {LabeledSample(singlet, 1)};
    ASSERT_NEAR(empirical_loss(one, xx, u), 1.0, 1e-14);

    const std::vector<LabeledSample> flipped = {LabeledSample(singlet, -1)};
    ASSERT_NEAR(empirical_loss(flipped, xx, u), -1.0, 1e-14);

    const std::vector<LabeledSample> both = {LabeledSample(singlet, 1), LabeledSample(singlet, -1)};
    ASSERT_NEAR(empirical_loss(both, xx, u), 0.0, 1e-14);

    ASSERT_THROW(empirical_loss(std::span<const LabeledSample>{}, xx, u), ValidationError);
}
