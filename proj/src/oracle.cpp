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

#include "symsim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include "symsim/error.hpp"
#include "symsim/kernels.hpp"
#include "symsim/parallel.hpp"

namespace symsim::dense {

namespace {

using cplx = std::complex<double>;

std::mutex g_limits_mutex;
OracleLimits g_limits;

void require_dense(int n) {
    if (n < 1 || n > limits().dense_max_n) {
        throw ValidationError("dense oracle supports 1 <= n <= " + std::to_string(limits().dense_max_n) + ", got n=" +
                              std::to_string(n));
    }
}

void require_group(int n) {
    require_dense(n);
    if (n > limits().group_max_n) {
        throw ValidationError("group sums over S_n support n <= " + std::to_string(limits().group_max_n) +
                              ", got n=" + std::to_string(n));
    }
}

Eigen::Index dim_of(int n) { return static_cast<Eigen::Index>(std::uint64_t{1} << n); }

std::uint64_t qubit_bit(int n, int qubit) { return std::uint64_t{1} << (n - 1 - qubit); }

// Adds coeff * word into m, where the word is a signed permutation matrix.
void accumulate_word(Eigen::MatrixXcd &m, const std::vector<Pauli> &word, cplx coeff) {
    const int n = static_cast<int>(word.size());
    std::uint64_t flip = 0;
    std::uint64_t sign = 0;
    int y_count = 0;
    for (int l = 0; l < n; l++) {
        const auto bit = qubit_bit(n, l);
        if (word[l] == Pauli::X || word[l] == Pauli::Y) {
            flip |= bit;
        }
        if (word[l] == Pauli::Y || word[l] == Pauli::Z) {
            sign |= bit;
        }
        if (word[l] == Pauli::Y) {
            y_count++;
        }
    }
    // Y|b> = i (-1)^b |1-b>, Z|b> = (-1)^b |b>.
    static constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx base = coeff * kIPowers[y_count % 4];
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t col = 0; col < dim; col++) {
        const bool negative = (std::popcount(col & sign) & 1) != 0;
        m(static_cast<Eigen::Index>(col ^ flip), static_cast<Eigen::Index>(col)) += negative ? -base : base;
    }
}

// Calls visit(perm) for every element of the product of the symmetric groups
// on each position set (positions outside all sets stay fixed).
template <class Visit>
void for_each_block_permutation(int n, const std::vector<std::vector<int>> &sets, Visit &&visit) {
    std::vector<std::vector<int>> images = sets;
    for (auto &s : images) {
        std::sort(s.begin(), s.end());
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    auto recurse = [&](auto &&self, std::size_t set) -> void {
        if (set == sets.size()) {
            visit(perm);
            return;
        }
        auto &img = images[set];
        std::sort(img.begin(), img.end());
        do {
            for (std::size_t k = 0; k < img.size(); k++) {
                perm[static_cast<std::size_t>(sets[set][k])] = img[k];
            }
            self(self, set + 1);
        } while (std::next_permutation(img.begin(), img.end()));
    };
    recurse(recurse, 0);
}

}  // namespace

OracleLimits limits() {
    std::lock_guard<std::mutex> lock(g_limits_mutex);
    return g_limits;
}

void set_limits(OracleLimits l) {
    std::lock_guard<std::mutex> lock(g_limits_mutex);
    g_limits = l;
}

DenseOperator::DenseOperator(int qubits, Eigen::MatrixXcd m) : n(qubits), matrix(std::move(m)) {
    if (qubits < 1 || qubits > 62 || matrix.rows() != dim_of(qubits) || matrix.cols() != dim_of(qubits)) {
        throw ValidationError("dense operator dimension does not match 2^n for n=" + std::to_string(qubits));
    }
}

DenseOperator DenseOperator::zero(int qubits) {
    require_dense(qubits);
    return {qubits, Eigen::MatrixXcd::Zero(dim_of(qubits), dim_of(qubits))};
}

DenseOperator DenseOperator::identity(int qubits) {
    require_dense(qubits);
    return {qubits, Eigen::MatrixXcd::Identity(dim_of(qubits), dim_of(qubits))};
}

DenseState::DenseState(int qubits, Eigen::VectorXcd v) : n(qubits), vector(std::move(v)) {
    if (qubits < 1 || qubits > 62 || vector.size() != dim_of(qubits)) {
        throw ValidationError("dense state length does not match 2^n for n=" + std::to_string(qubits));
    }
}

DenseOperator pauli_word(const std::vector<Pauli> &word) {
    const int n = static_cast<int>(word.size());
    DenseOperator out = DenseOperator::zero(n);
    accumulate_word(out.matrix, word, 1.0);
    return out;
}

DenseOperator dense_monomial(const MonomialIndex &i) {
    const int n = i.n();
    validate_monomial(i, n);
    DenseOperator out = DenseOperator::zero(n);
    std::vector<Pauli> word;
    word.insert(word.end(), static_cast<std::size_t>(i.i1), Pauli::I);
    word.insert(word.end(), static_cast<std::size_t>(i.ix), Pauli::X);
    word.insert(word.end(), static_cast<std::size_t>(i.iy), Pauli::Y);
    word.insert(word.end(), static_cast<std::size_t>(i.iz), Pauli::Z);
    do {
        accumulate_word(out.matrix, word, 1.0);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

DenseOperator dense_operator(const ComplexExpansion &u) {
    DenseOperator out = DenseOperator::zero(u.n());
    for (const auto &[i, c] : u.terms()) {
        out.matrix += c * dense_monomial(i).matrix;
    }
    return out;
}

DenseOperator dense_operator(const SymmetricOperator &h) { return dense_operator(to_complex(h)); }

std::uint64_t permute_index(std::uint64_t index, const std::vector<int> &perm) {
    const int n = static_cast<int>(perm.size());
    std::uint64_t out = 0;
    for (int l = 0; l < n; l++) {
        if (index & qubit_bit(n, l)) {
            out |= qubit_bit(n, perm[static_cast<std::size_t>(l)]);
        }
    }
    return out;
}

DenseOperator conjugate_by_permutation(const DenseOperator &m, const std::vector<int> &perm) {
    if (static_cast<int>(perm.size()) != m.n) {
        throw ValidationError("permutation length does not match qubit count");
    }
    const std::uint64_t dim = std::uint64_t{1} << m.n;
    std::vector<Eigen::Index> map(dim);
    for (std::uint64_t b = 0; b < dim; b++) {
        map[b] = static_cast<Eigen::Index>(permute_index(b, perm));
    }
    DenseOperator out = DenseOperator::zero(m.n);
    for (std::uint64_t c = 0; c < dim; c++) {
        for (std::uint64_t r = 0; r < dim; r++) {
            out.matrix(map[r], map[c]) = m.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

DenseOperator reynolds_twirl(const DenseOperator &m) {
    const int n = m.n;
    require_group(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);

    DenseOperator out = DenseOperator::zero(n);
    std::vector<Eigen::Index> map(dim);
    double group_order = 0.0;
    for_each_block_permutation(n, {all}, [&](const std::vector<int> &perm) {
        for (std::uint64_t b = 0; b < dim; b++) {
            map[b] = static_cast<Eigen::Index>(permute_index(b, perm));
        }
        for (std::uint64_t c = 0; c < dim; c++) {
            const Eigen::Index dst_col = map[c];
            for (std::uint64_t r = 0; r < dim; r++) {
                out.matrix(map[r], dst_col) += m.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
        group_order += 1.0;
    });
    out.matrix /= group_order;
    return out;
}

double invariance_deviation(const DenseOperator &m) {
    require_group(m.n);
    std::vector<int> all(static_cast<std::size_t>(m.n));
    std::iota(all.begin(), all.end(), 0);
    double worst = 0.0;
    for_each_block_permutation(m.n, {all}, [&](const std::vector<int> &perm) {
        worst = std::max(worst, (conjugate_by_permutation(m, perm).matrix - m.matrix).norm());
    });
    return worst;
}

DenseBasis::DenseBasis(int n) : n_(n), monomials_(enumerate_monomials(n)) {
    require_dense(n);
    matrices_.resize(monomials_.size());
    parallel_for(monomials_.size(), [&](std::size_t k) { matrices_[k] = dense_monomial(monomials_[k]); });
}

const DenseOperator &DenseBasis::at(const MonomialIndex &i) const {
    validate_monomial(i, n_);
    return matrices_[monomial_rank(i)];
}

Decomposition decompose_invariant(const DenseOperator &m, const DenseBasis &basis) {
    if (m.n != basis.n()) {
        throw ValidationError("dense basis and operator have different n");
    }
    const double hilbert_dim = std::ldexp(1.0, m.n);
    Decomposition out{ComplexExpansion(m.n), 0.0};
    Eigen::MatrixXcd residual = m.matrix;
    const auto size = static_cast<std::size_t>(residual.size());
    std::span<cplx> residual_span(residual.data(), size);
    for (std::size_t k = 0; k < basis.monomials().size(); k++) {
        const auto &a = basis.at(k).matrix;
        std::span<const cplx> a_span(a.data(), size);
        const cplx overlap = kernels::dot(a_span, std::span<const cplx>(m.matrix.data(), size));
        const cplx c = overlap / (class_size_double(basis.monomials()[k]) * hilbert_dim);
        if (std::abs(c) > 1e-14) {
            out.coefficients.add(basis.monomials()[k], c);
            kernels::axpy(-c, a_span, residual_span);
        }
    }
    out.residual = std::sqrt(kernels::norm_sq(residual_span));
    return out;
}

Decomposition decompose_invariant(const DenseOperator &m) { return decompose_invariant(m, DenseBasis(m.n)); }

Eigen::VectorXcd dicke_state(int m, int q) {
    if (m < 0 || q < 0 || q > m) {
        throw ValidationError("Dicke state needs 0 <= q <= m");
    }
    const std::uint64_t dim = std::uint64_t{1} << m;
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    const double amplitude = 1.0 / std::sqrt(binomial(m, q).get_d());
    for (std::uint64_t b = 0; b < dim; b++) {
        if (std::popcount(b) == q) {
            out(static_cast<Eigen::Index>(b)) = amplitude;
        }
    }
    return out;
}

DenseState dense_schur_state(const IrrepLabel &lambda, int q) {
    const int n = lambda.n();
    require_dense(n);
    validate_irrep(lambda, n);
    const int dicke = n - 2 * lambda.lambda1;
    if (q < 0 || q > dicke) {
        throw ValidationError("q index " + std::to_string(q) + " out of range for irrep " + lambda.str());
    }
    Eigen::VectorXcd state(1);
    state(0) = 1.0;
    Eigen::VectorXcd singlet = Eigen::VectorXcd::Zero(4);
    singlet(1) = 1.0 / std::sqrt(2.0);   // |01>
    singlet(2) = -1.0 / std::sqrt(2.0);  // |10>
    for (int l = 0; l < lambda.lambda1; l++) {
        Eigen::VectorXcd next(state.size() * 4);
        for (Eigen::Index a = 0; a < state.size(); a++) {
            next.segment(a * 4, 4) = state(a) * singlet;
        }
        state = std::move(next);
    }
    const Eigen::VectorXcd tail = dicke_state(dicke, q);
    Eigen::VectorXcd full(state.size() * tail.size());
    for (Eigen::Index a = 0; a < state.size(); a++) {
        full.segment(a * tail.size(), tail.size()) = state(a) * tail;
    }
    return {n, std::move(full)};
}

DenseState tableau_seed_state(const IrrepLabel &lambda, int q) {
    const int n = lambda.n();
    require_dense(n);
    validate_irrep(lambda, n);
    const int dicke = n - 2 * lambda.lambda1;
    if (q < 0 || q > dicke) {
        throw ValidationError("q index " + std::to_string(q) + " out of range for irrep " + lambda.str());
    }
    std::uint64_t index = 0;
    for (int l = 0; l < lambda.lambda1; l++) {
        index |= qubit_bit(n, 2 * l + 1);
    }
    for (int t = 0; t < q; t++) {
        index |= qubit_bit(n, n - 1 - t);
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_of(n));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return {n, std::move(v)};
}

std::uint64_t irrep_dimension(const IrrepLabel &lambda) { return irrep_multiplicity(lambda).get_ui(); }

DenseOperator young_symmetrizer(const IrrepLabel &lambda) {
    const int n = lambda.n();
    require_group(n);
    validate_irrep(lambda, n);
    const std::uint64_t dim = std::uint64_t{1} << n;

    std::vector<int> top_row;
    std::vector<int> bottom_row;
    for (int l = 0; l < lambda.lambda1; l++) {
        top_row.push_back(2 * l);
        bottom_row.push_back(2 * l + 1);
    }
    for (int q = 2 * lambda.lambda1; q < n; q++) {
        top_row.push_back(q);
    }

    auto add_permutation = [dim](Eigen::MatrixXcd &m, const std::vector<int> &perm, double weight) {
        for (std::uint64_t b = 0; b < dim; b++) {
            m(static_cast<Eigen::Index>(permute_index(b, perm)), static_cast<Eigen::Index>(b)) += weight;
        }
    };

    Eigen::MatrixXcd row_sum = Eigen::MatrixXcd::Zero(dim_of(n), dim_of(n));
    for_each_block_permutation(n, {top_row, bottom_row},
                               [&](const std::vector<int> &perm) { add_permutation(row_sum, perm, 1.0); });

    // Column group: independent transpositions of each two-box column.
    Eigen::MatrixXcd col_sum = Eigen::MatrixXcd::Zero(dim_of(n), dim_of(n));
    const std::uint64_t patterns = std::uint64_t{1} << lambda.lambda1;
    for (std::uint64_t mask = 0; mask < patterns; mask++) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int l = 0; l < lambda.lambda1; l++) {
            if (mask & (std::uint64_t{1} << l)) {
                std::swap(perm[static_cast<std::size_t>(2 * l)], perm[static_cast<std::size_t>(2 * l + 1)]);
            }
        }
        add_permutation(col_sum, perm, (std::popcount(mask) % 2 == 0) ? 1.0 : -1.0);
    }

    double n_factorial = 1.0;
    for (int k = 2; k <= n; k++) {
        n_factorial *= k;
    }
    const double prefactor = static_cast<double>(irrep_dimension(lambda)) / n_factorial;
    return {n, prefactor * (col_sum * row_sum)};
}

DenseState embed_schur_vector(const IrrepLabel &lambda, const Eigen::VectorXcd &amplitudes) {
    if (amplitudes.size() != lambda.q_dim()) {
        throw ValidationError("amplitude vector length does not match q_dim of " + lambda.str());
    }
    const int n = lambda.n();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim_of(n));
    for (int q = 0; q < lambda.q_dim(); q++) {
        out += amplitudes(q) * dense_schur_state(lambda, q).vector;
    }
    return {n, std::move(out)};
}

DenseOperator embed_block_state(const BlockState &rho) {
    const int n = rho.n();
    DenseOperator out = DenseOperator::zero(n);
    for (const auto &lambda : enumerate_irreps(n)) {
        Eigen::MatrixXcd basis(dim_of(n), lambda.q_dim());
        for (int q = 0; q < lambda.q_dim(); q++) {
            basis.col(q) = dense_schur_state(lambda, q).vector;
        }
        out.matrix += basis * rho.blocks().at(lambda) * basis.adjoint();
    }
    return out;
}

Eigen::VectorXd exact_spectrum(const SymmetricOperator &h) {
    require_dense(h.n());
    const DenseOperator m = dense_operator(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("dense eigensolver failed");
    }
    return solver.eigenvalues();
}

double exact_gse(const SymmetricOperator &h) { return exact_spectrum(h)(0); }

DenseOperator dense_evolution(const DenseOperator &h, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (h.matrix + h.matrix.adjoint()));
    const Eigen::VectorXcd phases =
        (solver.eigenvalues().cast<cplx>() * cplx(0.0, -t)).array().exp();
    return {h.n, solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint()};
}

double exact_expectation(const SymmetricOperator &o, const SymmetricOperator &h, double t, const DenseOperator &rho) {
    if (o.n() != h.n() || h.n() != rho.n) {
        throw ValidationError("observable, Hamiltonian and state must share n");
    }
    require_dense(h.n());
    const DenseOperator u = dense_evolution(dense_operator(h), t);
    const Eigen::MatrixXcd evolved = u.matrix * rho.matrix * u.matrix.adjoint();
    return (dense_operator(o).matrix * evolved).trace().real();
}

}  // namespace symsim::dense
