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

#include <algorithm>
#include <cmath>
#include <string>

#include "symsim/error.hpp"
#include "symsim/parallel.hpp"

namespace symsim {

namespace {

constexpr double kStateTolerance = 1e-9;
constexpr double kImaginaryResidue = 1e-9;

}  // namespace

BlockState::BlockState(BlockOperator blocks) : blocks_(std::move(blocks)) {
    if (blocks_.hermiticity_deviation() > kStateTolerance) {
        throw ValidationError("block state is not Hermitian");
    }
    if (min_eigenvalue() < -kStateTolerance) {
        throw ValidationError("block state is not positive semidefinite (min eigenvalue " +
                              std::to_string(min_eigenvalue()) + ")");
    }
    if (std::abs(trace() - 1.0) > kStateTolerance) {
        throw ValidationError("block state trace is " + std::to_string(trace()) + ", expected 1");
    }
}

BlockState BlockState::pure(const IrrepLabel &lambda, const Eigen::VectorXcd &amplitudes) {
    BlockOperator blocks(lambda.n());
    if (amplitudes.size() != lambda.q_dim()) {
        throw ValidationError("amplitude vector length " + std::to_string(amplitudes.size()) +
                              " does not match q_dim " + std::to_string(lambda.q_dim()));
    }
    blocks.at(lambda) = amplitudes * amplitudes.adjoint();
    return BlockState(std::move(blocks));
}

BlockState BlockState::mixed_on(int n, const IrrepLabel &lambda) {
    BlockOperator blocks(n);
    const int dim = lambda.q_dim();
    blocks.at(lambda) = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
    return BlockState(std::move(blocks));
}

double BlockState::trace() const {
    double total = 0.0;
    for (std::size_t l = 0; l < blocks_.num_blocks(); l++) {
        total += blocks_[static_cast<int>(l)].trace().real();
    }
    return total;
}

double BlockState::min_eigenvalue() const {
    const auto minima = block_minima(blocks_);
    return *std::min_element(minima.begin(), minima.end());
}

LabeledSample::LabeledSample(BlockState s, int y) : state(std::move(s)), label(y) {
    if (y != 1 && y != -1) {
        throw ValidationError("label must be -1 or +1, got " + std::to_string(y));
    }
}

BlockOperator evolution_from_blocks(const BlockOperator &hamiltonian_blocks, double t) {
    BlockOperator out(hamiltonian_blocks.n());
    parallel_for(out.num_blocks(), [&](std::size_t l) {
        const Eigen::MatrixXcd &h = hamiltonian_blocks[static_cast<int>(l)];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (h + h.adjoint()));
        const Eigen::VectorXcd phases =
            (solver.eigenvalues().cast<std::complex<double>>() * std::complex<double>(0.0, -t)).array().exp();
        out[static_cast<int>(l)] = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    });
    return out;
}

BlockOperator evolution_from_hamiltonian(const SymmetricOperator &h, double t) {
    return evolution_from_blocks(block_operator(h), t);
}

void require_unitary(const BlockOperator &u, double tolerance) {
    const double deviation = u.unitarity_deviation();
    if (deviation > tolerance) {
        throw NumericalError("operator is not unitary: max |U U^dagger - I| = " + std::to_string(deviation));
    }
}

BlockOperator unitary_from_coeffs(const ComplexExpansion &u) {
    BlockOperator blocks = block_operator(u);
    require_unitary(blocks);
    return blocks;
}

BlockState evolve_state(const BlockOperator &u, const BlockState &rho) {
    if (u.n() != rho.n()) {
        throw ValidationError("unitary and state have different n");
    }
    BlockOperator out(u.n());
    for (std::size_t l = 0; l < out.num_blocks(); l++) {
        const int k = static_cast<int>(l);
        out[k] = u[k] * rho.blocks()[k] * u[k].adjoint();
    }
    return BlockState(std::move(out));
}

double expectation(const BlockOperator &observable, const BlockOperator &u, const BlockState &rho) {
    if (observable.n() != u.n() || u.n() != rho.n()) {
        throw ValidationError("observable, unitary and state must share n");
    }
    std::vector<std::complex<double>> parts(u.num_blocks());
    parallel_for(parts.size(), [&](std::size_t l) {
        const int k = static_cast<int>(l);
        const Eigen::MatrixXcd heisenberg = u[k].adjoint() * observable[k] * u[k];
        parts[l] = (heisenberg * rho.blocks()[k]).trace();
    });
    std::complex<double> total = 0.0;
    for (const auto &p : parts) {
        total += p;
    }
    if (std::abs(total.imag()) > kImaginaryResidue * std::max(1.0, std::abs(total.real()))) {
        throw NumericalError("expectation value has imaginary residue " + std::to_string(total.imag()));
    }
    return total.real();
}

double expectation(const SymmetricOperator &o, const BlockOperator &u, const BlockState &rho) {
    if (o.n() != u.n()) {
        throw ValidationError("observable and unitary must share n");
    }
    return expectation(block_operator(o), u, rho);
}

double empirical_loss(std::span<const LabeledSample> samples, const SymmetricOperator &o, const BlockOperator &u) {
    if (samples.empty()) {
        throw ValidationError("empirical loss needs at least one sample");
    }
    const BlockOperator observable = block_operator(o);
    double total = 0.0;
    for (const auto &s : samples) {
        total += static_cast<double>(s.label) * expectation(observable, u, s.state);
    }
    return -total / static_cast<double>(samples.size());
}

}  // namespace symsim
