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

#include "symsim/structure.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "symsim/error.hpp"
#include "symsim/parallel.hpp"

namespace symsim {

namespace {

// Product sigma_a sigma_b = phase * sigma_{a ^ b}; indices 0..3 = 1, x, y, z.
// The phase exponent (power of i) is +1 for xy, yz, zx and -1 for yx, zy, xz.
constexpr int product_phase(int a, int b) {
    if (a == 0 || b == 0 || a == b) {
        return 0;
    }
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

void check_same_n(const MonomialIndex &i, const MonomialIndex &j) {
    if (i.n() != j.n()) {
        throw ValidationError("monomials " + i.str() + " and " + j.str() + " belong to different qubit counts");
    }
    validate_monomial(i, i.n());
    validate_monomial(j, j.n());
}

}  // namespace

StructureTensor::StructureTensor(int n) : n_(n) {
    if (n < 1) {
        throw ValidationError("invalid system size n=" + std::to_string(n));
    }
}

bool StructureTensor::contains(const MonomialIndex &i, const MonomialIndex &j) const {
    return rows_.count({i, j}) != 0;
}

const std::vector<StructureEntry> &StructureTensor::row(const MonomialIndex &i, const MonomialIndex &j) const {
    auto it = rows_.find({i, j});
    if (it == rows_.end()) {
        throw ValidationError("structure tensor has no entries for pair i=" + i.str() + " j=" + j.str());
    }
    return it->second;
}

std::complex<double> StructureTensor::value(const MonomialIndex &i, const MonomialIndex &j,
                                            const MonomialIndex &k) const {
    for (const auto &e : row(i, j)) {
        if (e.k == k) {
            return e.value;
        }
    }
    return {0.0, 0.0};
}

void StructureTensor::set_row(const MonomialIndex &i, const MonomialIndex &j, std::vector<StructureEntry> entries) {
    validate_monomial(i, n_);
    validate_monomial(j, n_);
    for (const auto &e : entries) {
        validate_monomial(e.k, n_);
    }
    std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) { return a.k < b.k; });
    rows_[{i, j}] = std::move(entries);
}

std::vector<StructureEntry> structure_row(const MonomialIndex &i, const MonomialIndex &j, const Factorials &fact) {
    check_same_n(i, j);
    const auto ic = i.counts();
    const auto jc = j.counts();

    std::map<MonomialIndex, GaussianSum> acc;
    std::array<std::array<int, 4>, 4> f{};
    std::array<int, 4> row_left{};  // i_a minus the assigned f_ab, b in {x,y,z}
    std::array<int, 4> col_left{};  // j_b minus the assigned f_ab, a in {x,y,z}
    for (int a = 1; a < 4; a++) {
        row_left[a] = ic[a];
        col_left[a] = jc[a];
    }

    auto emit = [&] {
        // Dependent variables.
        for (int b = 1; b < 4; b++) {
            f[0][b] = col_left[b];
        }
        for (int a = 1; a < 4; a++) {
            f[a][0] = row_left[a];
        }
        f[0][0] = ic[0] - (f[0][1] + f[0][2] + f[0][3]);
        if (f[0][0] < 0) {
            return;
        }
        std::array<int, 4> k{};
        int phase = 0;
        mpz_class denominator = 1;
        for (int a = 0; a < 4; a++) {
            for (int b = 0; b < 4; b++) {
                k[a ^ b] += f[a][b];
                phase += product_phase(a, b) * f[a][b];
                denominator *= fact(f[a][b]);
            }
        }
        mpz_class numerator = fact(k[0]) * fact(k[1]) * fact(k[2]) * fact(k[3]);
        mpz_class count;
        mpz_divexact(count.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
        acc[MonomialIndex::from_counts(k)].add(count, phase);
    };

    // Nine nested loops over f_ab, a,b in {x,y,z}, bounded by what is left of
    // row a and column b.
    auto recurse = [&](auto &&self, int cell) -> void {
        if (cell == 9) {
            emit();
            return;
        }
        const int a = 1 + cell / 3;
        const int b = 1 + cell % 3;
        const int bound = std::min(row_left[a], col_left[b]);
        for (int v = 0; v <= bound; v++) {
            f[a][b] = v;
            row_left[a] -= v;
            col_left[b] -= v;
            self(self, cell + 1);
            row_left[a] += v;
            col_left[b] += v;
        }
        f[a][b] = 0;
    };
    recurse(recurse, 0);

    std::vector<StructureEntry> out;
    out.reserve(acc.size());
    for (const auto &[k, sum] : acc) {
        if (!sum.is_zero()) {
            out.push_back({k, {sum.re.get_d(), sum.im.get_d()}});
        }
    }
    return out;
}

std::vector<StructureEntry> structure_row(const MonomialIndex &i, const MonomialIndex &j) {
    Factorials fact(i.n());
    return structure_row(i, j, fact);
}

std::complex<double> structure_constant(const MonomialIndex &i, const MonomialIndex &j, const MonomialIndex &k) {
    check_same_n(i, j);
    if (k.n() != i.n()) {
        throw ValidationError("monomial " + k.str() + " does not match qubit count " + std::to_string(i.n()));
    }
    validate_monomial(k, i.n());
    for (const auto &e : structure_row(i, j)) {
        if (e.k == k) {
            return e.value;
        }
    }
    return {0.0, 0.0};
}

StructureTensor compute_structure_tensor(int n, const std::vector<MonomialIndex> &left) {
    StructureTensor tensor(n);
    const auto basis = enumerate_monomials(n);
    const Factorials fact(n);
    for (const auto &i : left) {
        validate_monomial(i, n);
        std::vector<std::vector<StructureEntry>> rows(basis.size());
        parallel_for(basis.size(), [&](std::size_t c) { rows[c] = structure_row(i, basis[c], fact); });
        for (std::size_t c = 0; c < basis.size(); c++) {
            tensor.set_row(i, basis[c], std::move(rows[c]));
        }
    }
    return tensor;
}

StructureTensor structure_tensor_for(const SymmetricOperator &h) {
    std::vector<MonomialIndex> support;
    for (const auto &[i, c] : h.terms()) {
        support.push_back(i);
    }
    return compute_structure_tensor(h.n(), support);
}

Eigen::MatrixXcd regular_rep(const SymmetricOperator &h, const StructureTensor &tensor) {
    const int n = h.n();
    if (tensor.n() != n) {
        throw ValidationError("structure tensor is for n=" + std::to_string(tensor.n()) + ", operator for n=" +
                              std::to_string(n));
    }
    const auto basis = enumerate_monomials(n);
    const auto dim = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd rep = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; col++) {
        const auto &j = basis[static_cast<std::size_t>(col)];
        for (const auto &[i, hi] : h.terms()) {
            for (const auto &e : tensor.row(i, j)) {
                rep(static_cast<Eigen::Index>(monomial_rank(e.k)), col) += hi * e.value;
            }
        }
    }
    return rep;
}

Eigen::MatrixXcd regular_rep(const SymmetricOperator &h) { return regular_rep(h, structure_tensor_for(h)); }

Eigen::MatrixXcd hermitian_regular_rep(const Eigen::MatrixXcd &rep, int n) {
    const auto basis = enumerate_monomials(n);
    if (rep.rows() != static_cast<Eigen::Index>(basis.size()) || rep.cols() != rep.rows()) {
        throw ValidationError("regular representation has wrong dimension for n=" + std::to_string(n));
    }
    Eigen::VectorXd root(rep.rows());
    for (Eigen::Index k = 0; k < rep.rows(); k++) {
        root(k) = std::sqrt(class_size_double(basis[static_cast<std::size_t>(k)]));
    }
    Eigen::MatrixXcd scaled(rep.rows(), rep.cols());
    for (Eigen::Index col = 0; col < rep.cols(); col++) {
        for (Eigen::Index row = 0; row < rep.rows(); row++) {
            scaled(row, col) = rep(row, col) * (root(row) / root(col));
        }
    }
    return scaled;
}

double hermiticity_deviation(const Eigen::MatrixXcd &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd regular_spectrum(const SymmetricOperator &h, const StructureTensor &tensor) {
    const Eigen::MatrixXcd scaled = hermitian_regular_rep(regular_rep(h, tensor), h.n());
    const double scale = std::max(1.0, scaled.cwiseAbs().maxCoeff());
    const double deviation = hermiticity_deviation(scaled);
    if (deviation > 1e-8 * scale) {
        throw NumericalError("scaled regular representation is not Hermitian (deviation " + std::to_string(deviation) +
                             "); structure tensor is inconsistent");
    }
    const Eigen::MatrixXcd symmetric = 0.5 * (scaled + scaled.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(symmetric, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigensolver failed on the regular representation");
    }
    return solver.eigenvalues();
}

double gse_regular(const SymmetricOperator &h, const StructureTensor &tensor) {
    return regular_spectrum(h, tensor).minCoeff();
}

double gse_regular(const SymmetricOperator &h) { return gse_regular(h, structure_tensor_for(h)); }

}  // namespace symsim
