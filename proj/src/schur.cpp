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

#include "symsim/schur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symsim/error.hpp"
#include "symsim/parallel.hpp"

namespace symsim {

IrrepLabel IrrepLabel::from_lambda1(int n, int lambda1) {
    IrrepLabel out{n - lambda1, lambda1};
    validate_irrep(out, n);
    return out;
}

std::string IrrepLabel::str() const { return "(" + std::to_string(lambda0) + "," + std::to_string(lambda1) + ")"; }

void validate_irrep(const IrrepLabel &lambda, int n) {
    if (lambda.lambda1 < 0 || lambda.lambda0 < lambda.lambda1 || lambda.n() != n) {
        throw ValidationError("irrep " + lambda.str() + " is not a two-row partition of " + std::to_string(n));
    }
}

std::vector<IrrepLabel> enumerate_irreps(int n) {
    if (n < 1) {
        throw ValidationError("invalid system size n=" + std::to_string(n));
    }
    std::vector<IrrepLabel> out;
    for (int l = 0; 2 * l <= n; l++) {
        out.push_back({n - l, l});
    }
    return out;
}

mpz_class irrep_multiplicity(const IrrepLabel &lambda) {
    return binomial(lambda.n(), lambda.lambda1) - binomial(lambda.n(), lambda.lambda1 - 1);
}

std::complex<double> f_element(const MonomialIndex &i, const IrrepLabel &lambda, int q, int q_prime,
                               const Factorials &fact) {
    const int n = i.n();
    validate_monomial(i, n);
    validate_irrep(lambda, n);
    const int dicke = n - 2 * lambda.lambda1;
    if (q < 0 || q > dicke || q_prime < 0 || q_prime > dicke) {
        throw ValidationError("q index out of range [0," + std::to_string(dicke) + "] for irrep " + lambda.str());
    }
    const int l1 = lambda.lambda1;

    // Pairs: f_aa singlet pairs carry sigma_a sigma_a. Dicke register: g_{s a s'}
    // qubits carry sigma_a between bra bit s and ket bit s'. The linear system
    // has rank 7 in 12 unknowns; loop over f_xx, f_yy, f_zz, g_0x1, g_1z1.
    GaussianSum sum;
    for (int fxx = 0; 2 * fxx <= i.ix; fxx++) {
        for (int fyy = 0; 2 * fyy <= i.iy; fyy++) {
            for (int fzz = 0; 2 * fzz <= i.iz; fzz++) {
                const int f11 = l1 - fxx - fyy - fzz;
                if (f11 < 0 || 2 * f11 > i.i1) {
                    continue;
                }
                const int x_rest = i.ix - 2 * fxx;
                const int y_rest = i.iy - 2 * fyy;
                const int z_rest = i.iz - 2 * fzz;
                for (int g0x1 = 0; g0x1 <= x_rest; g0x1++) {
                    const int g1x0 = x_rest - g0x1;
                    const int y_diff = (q_prime - q) - g0x1 + g1x0;
                    if ((y_rest + y_diff) % 2 != 0) {
                        continue;
                    }
                    const int g0y1 = (y_rest + y_diff) / 2;
                    const int g1y0 = y_rest - g0y1;
                    if (g0y1 < 0 || g1y0 < 0) {
                        continue;
                    }
                    for (int g1z1 = 0; g1z1 <= z_rest; g1z1++) {
                        const int g0z0 = z_rest - g1z1;
                        const int g111 = q - g1z1 - g1x0 - g1y0;
                        const int g010 = dicke - q - g0z0 - g0x1 - g0y1;
                        if (g111 < 0 || g010 < 0) {
                            continue;
                        }
                        if (g010 + g0z0 + g1x0 + g1y0 != dicke - q_prime ||
                            g111 + g1z1 + g0x1 + g0y1 != q_prime || 2 * f11 + g010 + g111 != i.i1) {
                            continue;
                        }
                        const mpz_class count = fact.multinomial(l1, {f11, fxx, fyy, fzz}) *
                                                fact.multinomial(dicke, {g010, g111, g0x1, g1x0, g0y1, g1y0, g0z0, g1z1});
                        sum.add(count, 2 * (fxx + fyy + fzz) + 2 * g1z1 - g0y1 + g1y0);
                    }
                }
            }
        }
    }
    if (sum.is_zero()) {
        return {0.0, 0.0};
    }
    const mpz_class norm_sq = binomial(dicke, q) * binomial(dicke, q_prime);
    const double norm = std::sqrt(norm_sq.get_d());
    return {sum.re.get_d() / norm, sum.im.get_d() / norm};
}

std::complex<double> f_element(const MonomialIndex &i, const IrrepLabel &lambda, int q, int q_prime) {
    Factorials fact(i.n());
    return f_element(i, lambda, q, q_prime, fact);
}

FBlock f_block(const MonomialIndex &i, const IrrepLabel &lambda, const Factorials &fact) {
    const int dim = lambda.q_dim();
    validate_irrep(lambda, i.n());
    FBlock out{i, lambda, Eigen::MatrixXcd::Zero(dim, dim)};
    // A_i flips at most ix + iy qubits, so entries further from the diagonal vanish.
    const int reach = i.ix + i.iy;
    for (int q = 0; q < dim; q++) {
        for (int qp = std::max(0, q - reach); qp < std::min(dim, q + reach + 1); qp++) {
            out.matrix(q, qp) = f_element(i, lambda, q, qp, fact);
        }
    }
    return out;
}

FBlock f_block(const MonomialIndex &i, const IrrepLabel &lambda) {
    Factorials fact(i.n());
    return f_block(i, lambda, fact);
}

FTensor::FTensor(int n) : n_(n) {
    if (n < 1) {
        throw ValidationError("invalid system size n=" + std::to_string(n));
    }
}

void FTensor::insert(FBlock block) {
    validate_monomial(block.i, n_);
    validate_irrep(block.lambda, n_);
    const int dim = block.lambda.q_dim();
    if (block.matrix.rows() != dim || block.matrix.cols() != dim) {
        throw ValidationError("F block for " + block.i.str() + " lambda " + block.lambda.str() + " must be " +
                              std::to_string(dim) + "x" + std::to_string(dim));
    }
    auto key = std::make_pair(block.i, block.lambda.lambda1);
    blocks_[key] = std::move(block);
}

bool FTensor::contains(const MonomialIndex &i, int lambda1) const { return blocks_.count({i, lambda1}) != 0; }

const FBlock &FTensor::at(const MonomialIndex &i, int lambda1) const {
    auto it = blocks_.find({i, lambda1});
    if (it == blocks_.end()) {
        throw ValidationError("F tensor has no block for i=" + i.str() + " lambda1=" + std::to_string(lambda1));
    }
    return it->second;
}

FTensor compute_f_tensor(int n, const std::vector<MonomialIndex> &monomials) {
    FTensor out(n);
    const Factorials fact(n);
    const auto irreps = enumerate_irreps(n);
    for (const auto &i : monomials) {
        std::vector<FBlock> blocks(irreps.size());
        parallel_for(irreps.size(), [&](std::size_t l) { blocks[l] = f_block(i, irreps[l], fact); });
        for (auto &b : blocks) {
            out.insert(std::move(b));
        }
    }
    return out;
}

BlockOperator::BlockOperator(int n) : n_(n) {
    for (const auto &lambda : enumerate_irreps(n)) {
        blocks_.push_back(Eigen::MatrixXcd::Zero(lambda.q_dim(), lambda.q_dim()));
    }
}

BlockOperator BlockOperator::identity(int n) {
    BlockOperator out(n);
    for (auto &b : out.blocks_) {
        b.setIdentity();
    }
    return out;
}

void BlockOperator::check_index(int lambda1) const {
    if (lambda1 < 0 || static_cast<std::size_t>(lambda1) >= blocks_.size()) {
        throw ValidationError("no irrep with lambda1=" + std::to_string(lambda1) + " for n=" + std::to_string(n_));
    }
}

Eigen::MatrixXcd &BlockOperator::operator[](int lambda1) {
    check_index(lambda1);
    return blocks_[static_cast<std::size_t>(lambda1)];
}

const Eigen::MatrixXcd &BlockOperator::operator[](int lambda1) const {
    check_index(lambda1);
    return blocks_[static_cast<std::size_t>(lambda1)];
}

Eigen::MatrixXcd &BlockOperator::at(const IrrepLabel &lambda) {
    validate_irrep(lambda, n_);
    return (*this)[lambda.lambda1];
}

const Eigen::MatrixXcd &BlockOperator::at(const IrrepLabel &lambda) const {
    validate_irrep(lambda, n_);
    return (*this)[lambda.lambda1];
}

BlockOperator BlockOperator::adjoint() const {
    BlockOperator out(n_);
    for (std::size_t l = 0; l < blocks_.size(); l++) {
        out.blocks_[l] = blocks_[l].adjoint();
    }
    return out;
}

double BlockOperator::unitarity_deviation() const {
    double worst = 0.0;
    for (const auto &b : blocks_) {
        const Eigen::MatrixXcd gram = b * b.adjoint() - Eigen::MatrixXcd::Identity(b.rows(), b.cols());
        worst = std::max(worst, gram.cwiseAbs().maxCoeff());
    }
    return worst;
}

double BlockOperator::hermiticity_deviation() const {
    double worst = 0.0;
    for (const auto &b : blocks_) {
        worst = std::max(worst, (b - b.adjoint()).cwiseAbs().maxCoeff());
    }
    return worst;
}

BlockOperator operator*(const BlockOperator &a, const BlockOperator &b) {
    if (a.n_ != b.n_) {
        throw ValidationError("block operators for different n cannot be multiplied");
    }
    BlockOperator out(a.n_);
    for (std::size_t l = 0; l < a.blocks_.size(); l++) {
        out.blocks_[l] = a.blocks_[l] * b.blocks_[l];
    }
    return out;
}

BlockOperator block_operator(const ComplexExpansion &coeffs) {
    const int n = coeffs.n();
    const Factorials fact(n);
    const auto irreps = enumerate_irreps(n);
    BlockOperator out(n);
    parallel_for(irreps.size(), [&](std::size_t l) {
        Eigen::MatrixXcd &block = out[static_cast<int>(l)];
        for (const auto &[i, c] : coeffs.terms()) {
            block += c * f_block(i, irreps[l], fact).matrix;
        }
    });
    return out;
}

BlockOperator block_operator(const SymmetricOperator &coeffs) { return block_operator(to_complex(coeffs)); }

BlockOperator block_operator(const SymmetricOperator &coeffs, const FTensor &tensor) {
    const int n = coeffs.n();
    if (tensor.n() != n) {
        throw ValidationError("F tensor is for n=" + std::to_string(tensor.n()) + ", operator for n=" +
                              std::to_string(n));
    }
    BlockOperator out(n);
    for (const auto &lambda : enumerate_irreps(n)) {
        for (const auto &[i, c] : coeffs.terms()) {
            out.at(lambda) += c * tensor.at(i, lambda.lambda1).matrix;
        }
    }
    return out;
}

std::vector<double> block_minima(const BlockOperator &blocks) {
    std::vector<double> minima(blocks.num_blocks());
    parallel_for(minima.size(), [&](std::size_t l) {
        const Eigen::MatrixXcd &b = blocks[static_cast<int>(l)];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (b + b.adjoint()), Eigen::EigenvaluesOnly);
        minima[l] = solver.eigenvalues()(0);
    });
    return minima;
}

GroundStateResult ground_state(const BlockOperator &blocks, double tolerance) {
    const int n = blocks.n();
    const auto minima = block_minima(blocks);
    const double energy = *std::min_element(minima.begin(), minima.end());
    const double window = tolerance * std::max(1.0, std::abs(energy));

    GroundStateResult out;
    out.energy = energy;
    int winner = -1;
    for (std::size_t l = 0; l < minima.size(); l++) {
        if (minima[l] - energy <= window) {
            out.degenerate_irreps.push_back(IrrepLabel::from_lambda1(n, static_cast<int>(l)));
            if (winner < 0) {
                winner = static_cast<int>(l);
            }
        }
    }
    out.lambda_min = IrrepLabel::from_lambda1(n, winner);

    const Eigen::MatrixXcd &b = blocks[winner];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (b + b.adjoint()));
    Eigen::VectorXcd v = solver.eigenvectors().col(0);
    v.normalize();
    for (Eigen::Index q = 0; q < v.size(); q++) {
        if (std::abs(v(q)) > 1e-10) {
            v *= std::conj(v(q)) / std::abs(v(q));
            v(q) = std::abs(v(q));
            break;
        }
    }
    out.amplitudes = v;
    return out;
}

GroundStateResult ground_state(const SymmetricOperator &h, double tolerance) {
    return ground_state(block_operator(h), tolerance);
}

}  // namespace symsim
