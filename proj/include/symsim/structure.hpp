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
#include <utility>
#include <vector>

#include "symsim/combinatorics.hpp"
#include "symsim/monomial.hpp"

namespace symsim {

/// One non-zero entry X^{i,j}_k for fixed (i, j).
struct StructureEntry {
    MonomialIndex k;
    std::complex<double> value;
};

/// Sparse structure constants of the symmetrized Pauli algebra:
/// A_i A_j = sum_k X^{i,j}_k A_k. Only the (i, j) pairs that were requested
/// are present; each stored row lists the non-zero k in canonical order.
class StructureTensor {
  public:
    using Key = std::pair<MonomialIndex, MonomialIndex>;

    StructureTensor() = default;
    explicit StructureTensor(int n);

    int n() const { return n_; }
    bool contains(const MonomialIndex &i, const MonomialIndex &j) const;
    /// Throws ValidationError if the (i, j) pair is missing.
    const std::vector<StructureEntry> &row(const MonomialIndex &i, const MonomialIndex &j) const;
    std::complex<double> value(const MonomialIndex &i, const MonomialIndex &j, const MonomialIndex &k) const;

    void set_row(const MonomialIndex &i, const MonomialIndex &j, std::vector<StructureEntry> entries);
    const std::map<Key, std::vector<StructureEntry>> &rows() const { return rows_; }

  private:
    int n_ = 0;
    std::map<Key, std::vector<StructureEntry>> rows_;
};

/// All non-zero X^{i,j}_k for fixed (i, j), sorted by k.
///
/// Sums the closed-form count over the 16 overlap numbers f_ab (how many qubits
/// carry sigma_a in the left word and sigma_b in the right word). The nine
/// f_ab with a, b in {x, y, z} are enumerated; the remaining seven follow from
/// the row/column sums, and k is read off from the Pauli product table, so a
/// single pass yields every k at once.
std::vector<StructureEntry> structure_row(const MonomialIndex &i, const MonomialIndex &j, const Factorials &fact);
std::vector<StructureEntry> structure_row(const MonomialIndex &i, const MonomialIndex &j);

/// Single structure constant X^{i,j}_k; zero if no overlap pattern produces k.
std::complex<double> structure_constant(const MonomialIndex &i, const MonomialIndex &j, const MonomialIndex &k);

/// Tensor rows for every i in `left` and every monomial j of size n.
StructureTensor compute_structure_tensor(int n, const std::vector<MonomialIndex> &left);
/// Tensor rows needed by regular_rep(h, ...): i over the support of h.
StructureTensor structure_tensor_for(const SymmetricOperator &h);

/// Regular representation hat h^j_k = sum_i h_i X^{i,j}_k. Rows index k and
/// columns index j, both in canonical monomial order.
Eigen::MatrixXcd regular_rep(const SymmetricOperator &h, const StructureTensor &tensor);
Eigen::MatrixXcd regular_rep(const SymmetricOperator &h);

/// D^{1/2} hat h D^{-1/2} with D = diag(class_size). Hermitian for real h.
Eigen::MatrixXcd hermitian_regular_rep(const Eigen::MatrixXcd &rep, int n);

/// Max-norm deviation of m from Hermiticity.
double hermiticity_deviation(const Eigen::MatrixXcd &m);

/// Ground-state energy via the regular representation. Throws NumericalError
/// if the scaled representation is not Hermitian to 1e-8 (relative to its max
/// entry when that exceeds 1), which signals an inconsistent tensor.
double gse_regular(const SymmetricOperator &h, const StructureTensor &tensor);
double gse_regular(const SymmetricOperator &h);

/// Ascending eigenvalues of the Hermitian-scaled regular representation.
Eigen::VectorXd regular_spectrum(const SymmetricOperator &h, const StructureTensor &tensor);

}  // namespace symsim
