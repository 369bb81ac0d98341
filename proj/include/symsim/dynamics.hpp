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

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "symsim/monomial.hpp"
#include "symsim/schur.hpp"

namespace symsim {

/// Density operator written block-diagonally over the irreps, with the
/// multiplicity register traced out. Construction validates that every block
/// is Hermitian PSD (minimum eigenvalue >= -1e-9) and that the total trace is
/// 1 to within 1e-9.
class BlockState {
  public:
    explicit BlockState(BlockOperator blocks);

    /// Pure state |lambda, psi> with amplitudes over the q register.
    static BlockState pure(const IrrepLabel &lambda, const Eigen::VectorXcd &amplitudes);
    /// Maximally mixed state on the q register of one irrep.
    static BlockState mixed_on(int n, const IrrepLabel &lambda);

    int n() const { return blocks_.n(); }
    const BlockOperator &blocks() const { return blocks_; }
    double trace() const;
    double min_eigenvalue() const;

  private:
    BlockOperator blocks_;
};

struct LabeledSample {
    BlockState state;
    int label;

    LabeledSample(BlockState s, int y);
};

/// Per-block exp(-i hat h^lambda t), via Hermitian eigendecomposition.
BlockOperator evolution_from_hamiltonian(const SymmetricOperator &h, double t);
BlockOperator evolution_from_blocks(const BlockOperator &hamiltonian_blocks, double t);

/// Per-block sum_i u_i F^{i,lambda}. Throws NumericalError unless every block
/// is unitary to 1e-8 in max norm.
BlockOperator unitary_from_coeffs(const ComplexExpansion &u);

/// Throws NumericalError unless the blocks are unitary to `tolerance`.
void require_unitary(const BlockOperator &u, double tolerance = 1e-8);

/// U rho U^dagger per block.
BlockState evolve_state(const BlockOperator &u, const BlockState &rho);

/// sum_lambda tr(U^dagger O U rho) with Hermitian blocks O. Throws
/// NumericalError if the imaginary residue exceeds 1e-9.
double expectation(const BlockOperator &observable, const BlockOperator &u, const BlockState &rho);
double expectation(const SymmetricOperator &o, const BlockOperator &u, const BlockState &rho);

/// -(1/M) sum_m y_m expectation(o, U, rho_m). Throws ValidationError on an
/// empty sample list.
double empirical_loss(std::span<const LabeledSample> samples, const SymmetricOperator &o, const BlockOperator &u);

}  // namespace symsim
