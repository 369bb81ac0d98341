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

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "symsim/combinatorics.hpp"
#include "symsim/monomial.hpp"

namespace symsim {

/// Two-row Young diagram (lambda0, lambda1) labelling an S_n irrep that occurs
/// on n qubits. The q register of the irrep has dimension n - 2*lambda1 + 1.
struct IrrepLabel {
    int lambda0 = 0;
    int lambda1 = 0;

    constexpr int n() const { return lambda0 + lambda1; }
    constexpr int q_dim() const { return lambda0 - lambda1 + 1; }

    static IrrepLabel from_lambda1(int n, int lambda1);
    std::string str() const;

    friend constexpr auto operator<=>(const IrrepLabel &, const IrrepLabel &) = default;
};

/// Throws ValidationError unless lambda0 >= lambda1 >= 0 and they sum to n.
void validate_irrep(const IrrepLabel &lambda, int n);

/// (n - l, l) for l = 0..floor(n/2), ascending lambda1.
std::vector<IrrepLabel> enumerate_irreps(int n);

/// Number of copies of the irrep inside (C^2)^{\otimes n}: C(n,l) - C(n,l-1).
mpz_class irrep_multiplicity(const IrrepLabel &lambda);

/// Matrix element <lambda, q| A_i |lambda, q'> in the singlet x Dicke basis
/// for the column-first standard tableau.
std::complex<double> f_element(const MonomialIndex &i, const IrrepLabel &lambda, int q, int q_prime,
                               const Factorials &fact);
std::complex<double> f_element(const MonomialIndex &i, const IrrepLabel &lambda, int q, int q_prime);

/// Restriction F^{i,lambda} of A_i to one irrep.
struct FBlock {
    MonomialIndex i;
    IrrepLabel lambda;
    Eigen::MatrixXcd matrix;
};

FBlock f_block(const MonomialIndex &i, const IrrepLabel &lambda, const Factorials &fact);
FBlock f_block(const MonomialIndex &i, const IrrepLabel &lambda);

/// Collection of F blocks keyed by (monomial, lambda1); the serialized form of
/// precomputed matrix elements.
class FTensor {
  public:
    FTensor() = default;
    explicit FTensor(int n);

    int n() const { return n_; }
    void insert(FBlock block);
    bool contains(const MonomialIndex &i, int lambda1) const;
    /// Throws ValidationError when the block is missing.
    const FBlock &at(const MonomialIndex &i, int lambda1) const;
    const std::map<std::pair<MonomialIndex, int>, FBlock> &blocks() const { return blocks_; }

  private:
    int n_ = 0;
    std::map<std::pair<MonomialIndex, int>, FBlock> blocks_;
};

/// Every F block for the given monomials and every irrep of n.
FTensor compute_f_tensor(int n, const std::vector<MonomialIndex> &monomials);

/// Block-diagonal operator over the irreps of n: one q_dim x q_dim matrix per
/// lambda, stored by ascending lambda1.
class BlockOperator {
  public:
    BlockOperator() = default;
    explicit BlockOperator(int n);

    static BlockOperator identity(int n);

    int n() const { return n_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    Eigen::MatrixXcd &operator[](int lambda1);
    const Eigen::MatrixXcd &operator[](int lambda1) const;
    Eigen::MatrixXcd &at(const IrrepLabel &lambda);
    const Eigen::MatrixXcd &at(const IrrepLabel &lambda) const;

    BlockOperator adjoint() const;
    /// Max over blocks of || B B^dagger - I ||_max.
    double unitarity_deviation() const;
    /// Max over blocks of || B - B^dagger ||_max.
    double hermiticity_deviation() const;

    friend BlockOperator operator*(const BlockOperator &a, const BlockOperator &b);

  private:
    void check_index(int lambda1) const;

    int n_ = 0;
    std::vector<Eigen::MatrixXcd> blocks_;
};

/// Per-irrep hat h^lambda = sum_i c_i F^{i,lambda}.
BlockOperator block_operator(const ComplexExpansion &coeffs);
BlockOperator block_operator(const SymmetricOperator &coeffs);
/// Same, using precomputed F blocks (e.g. read back from a dump).
BlockOperator block_operator(const SymmetricOperator &coeffs, const FTensor &tensor);

struct GroundStateResult {
    double energy = 0.0;
    IrrepLabel lambda_min;
    /// Unit vector over the q register of lambda_min, first non-zero entry real positive.
    Eigen::VectorXcd amplitudes;
    std::vector<IrrepLabel> degenerate_irreps;
};

/// Minimum eigenvalue per block; lambda_min is the smallest lambda1 whose
/// block minimum lies within `tolerance * max(1, |E|)` of the global minimum.
GroundStateResult ground_state(const BlockOperator &blocks, double tolerance = 1e-10);
GroundStateResult ground_state(const SymmetricOperator &h, double tolerance = 1e-10);

/// Lowest eigenvalue of every block, by ascending lambda1.
std::vector<double> block_minima(const BlockOperator &blocks);

}  // namespace symsim
