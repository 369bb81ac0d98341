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

#include <cstdint>
#include <vector>

#include "symsim/dynamics.hpp"
#include "symsim/monomial.hpp"
#include "symsim/schur.hpp"

// Brute-force ground truth on the full 2^n-dimensional Hilbert space. Qubit 0
// is the leftmost tensor factor, i.e. the most significant bit of a basis
// index. Everything here is exponential in n and exists to cross-check the
// polynomial-time paths at small n.

namespace symsim::dense {

/// Size caps for the oracle. `dense_max_n` bounds anything that stores a
/// 2^n x 2^n matrix; `group_max_n` bounds sums over all of S_n (or over a
/// full Young row group).
struct OracleLimits {
    int dense_max_n = 12;
    int group_max_n = 7;
};

OracleLimits limits();
void set_limits(OracleLimits l);

/// 2^n x 2^n complex matrix on n qubits.
struct DenseOperator {
    int n = 0;
    Eigen::MatrixXcd matrix;

    DenseOperator() = default;
    DenseOperator(int qubits, Eigen::MatrixXcd m);
    static DenseOperator zero(int qubits);
    static DenseOperator identity(int qubits);
};

/// Length-2^n state vector.
struct DenseState {
    int n = 0;
    Eigen::VectorXcd vector;

    DenseState() = default;
    DenseState(int qubits, Eigen::VectorXcd v);
};

/// Tensor product of single-qubit Paulis, word[0] acting on qubit 0.
DenseOperator pauli_word(const std::vector<Pauli> &word);

/// A_i as the sum over all distinct orderings of its Pauli word.
DenseOperator dense_monomial(const MonomialIndex &i);
DenseOperator dense_operator(const SymmetricOperator &h);
DenseOperator dense_operator(const ComplexExpansion &u);

/// Basis index after moving qubit l to position perm[l].
std::uint64_t permute_index(std::uint64_t index, const std::vector<int> &perm);
/// R(pi) M R(pi)^dagger, applied as an index permutation.
DenseOperator conjugate_by_permutation(const DenseOperator &m, const std::vector<int> &perm);

/// (1/n!) sum_pi R(pi) M R(pi)^dagger.
DenseOperator reynolds_twirl(const DenseOperator &m);

/// max_pi || R(pi) M R(pi)^dagger - M ||_F over all of S_n.
double invariance_deviation(const DenseOperator &m);

/// Dense matrices of every monomial for one n, built once and reused.
class DenseBasis {
  public:
    explicit DenseBasis(int n);

    int n() const { return n_; }
    const std::vector<MonomialIndex> &monomials() const { return monomials_; }
    const DenseOperator &at(std::size_t rank) const { return matrices_[rank]; }
    const DenseOperator &at(const MonomialIndex &i) const;

  private:
    int n_;
    std::vector<MonomialIndex> monomials_;
    std::vector<DenseOperator> matrices_;
};

struct Decomposition {
    ComplexExpansion coefficients;
    double residual = 0.0;
};

/// c_i = tr(A_i^dagger M) / (class_size(i) 2^n) and residual ||M - sum c_i A_i||_F.
/// Coefficients with |c_i| <= 1e-14 are dropped.
Decomposition decompose_invariant(const DenseOperator &m, const DenseBasis &basis);
Decomposition decompose_invariant(const DenseOperator &m);

/// Normalized equal superposition of all m-bit strings with q ones.
Eigen::VectorXcd dicke_state(int m, int q);
/// Normalized singlet^{lambda1} (x) Dicke(n - 2 lambda1, q), singlet pairs first.
DenseState dense_schur_state(const IrrepLabel &lambda, int q);
/// |01>^{lambda1} (x) |0>^{n-2lambda1-q} (x) |1>^q.
DenseState tableau_seed_state(const IrrepLabel &lambda, int q);

/// dim(lambda)/n! (sum_col sgn(c) P(c)) (sum_row P(r)) for the column-first
/// standard tableau: column l holds qubits 2l and 2l+1, the first row also
/// holds qubits 2 lambda1 .. n-1.
DenseOperator young_symmetrizer(const IrrepLabel &lambda);

/// Number of standard Young tableaux of shape lambda.
std::uint64_t irrep_dimension(const IrrepLabel &lambda);

/// Lifts q-register amplitudes of one irrep into the dense space.
DenseState embed_schur_vector(const IrrepLabel &lambda, const Eigen::VectorXcd &amplitudes);
/// sum_lambda S_lambda rho_lambda S_lambda^dagger with S_lambda the Schur states
/// of the canonical multiplicity slot.
DenseOperator embed_block_state(const BlockState &rho);

/// Sorted eigenvalues of the dense assembly of h.
Eigen::VectorXd exact_spectrum(const SymmetricOperator &h);
double exact_gse(const SymmetricOperator &h);

/// exp(-i H t) for Hermitian dense H.
DenseOperator dense_evolution(const DenseOperator &h, double t);

/// tr(O e^{-iHt} rho e^{iHt}) on the dense space.
double exact_expectation(const SymmetricOperator &o, const SymmetricOperator &h, double t, const DenseOperator &rho);

}  // namespace symsim::dense
