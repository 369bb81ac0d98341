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

#include <gmpxx.h>

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symsim/error.hpp"

namespace symsim {

/// Pauli factor labels in the order used throughout: identity, X, Y, Z.
enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

/// Label of a symmetrized Pauli monomial A_i: how many identity, X, Y and Z
/// factors each Pauli word in the symmetrization class carries.
///
/// The defaulted comparison is lexicographic on (i1, ix, iy, iz), which is the
/// canonical basis order used for matrix indexing and file dumps.
struct MonomialIndex {
    int i1 = 0;
    int ix = 0;
    int iy = 0;
    int iz = 0;

    constexpr int n() const { return i1 + ix + iy + iz; }
    constexpr int count(Pauli p) const {
        switch (p) {
            case Pauli::I:
                return i1;
            case Pauli::X:
                return ix;
            case Pauli::Y:
                return iy;
            default:
                return iz;
        }
    }
    constexpr std::array<int, 4> counts() const { return {i1, ix, iy, iz}; }
    /// Number of non-identity factors.
    constexpr int weight() const { return ix + iy + iz; }

    static constexpr MonomialIndex identity(int n) { return {n, 0, 0, 0}; }
    static MonomialIndex from_counts(const std::array<int, 4> &c) { return {c[0], c[1], c[2], c[3]}; }

    std::string str() const;

    friend constexpr auto operator<=>(const MonomialIndex &, const MonomialIndex &) = default;
};

/// Throws ValidationError unless all counts are non-negative and sum to n.
void validate_monomial(const MonomialIndex &i, int n);

/// All monomials for n qubits in canonical order; C(n+3,3) of them.
std::vector<MonomialIndex> enumerate_monomials(int n);

/// C(n+3,3) without materializing the list.
std::size_t monomial_count(int n);

/// Position of i inside enumerate_monomials(i.n()).
std::size_t monomial_rank(const MonomialIndex &i);

/// |P_i| = n! / (i1! ix! iy! iz!): number of distinct Pauli words summed into A_i.
mpz_class class_size(const MonomialIndex &i);
double class_size_double(const MonomialIndex &i);

/// Sparse expansion sum_i c_i A_i over the symmetrized Pauli basis for a fixed
/// qubit count. Keys are validated against n on insertion.
template <class Scalar>
class BasisExpansion {
  public:
    using Terms = std::map<MonomialIndex, Scalar>;

    BasisExpansion() = default;
    explicit BasisExpansion(int n) : n_(n) {
        if (n < 1) {
            throw ValidationError("qubit count must be at least 1, got " + std::to_string(n));
        }
    }

    int n() const { return n_; }
    const Terms &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Adds c to the coefficient of A_i (terms with equal labels accumulate).
    BasisExpansion &add(const MonomialIndex &i, Scalar c) {
        validate_monomial(i, n_);
        terms_[i] += c;
        return *this;
    }

    Scalar coefficient(const MonomialIndex &i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? Scalar{} : it->second;
    }

    BasisExpansion scaled(Scalar alpha) const {
        BasisExpansion out(n_);
        for (const auto &[i, c] : terms_) {
            out.terms_[i] = alpha * c;
        }
        return out;
    }

  private:
    int n_ = 1;
    Terms terms_;
};

/// Hermitian operator sum_i h_i A_i with real coefficients.
using SymmetricOperator = BasisExpansion<double>;
/// General algebra element sum_i u_i A_i (used for unitaries).
using ComplexExpansion = BasisExpansion<std::complex<double>>;

/// Promotes real coefficients to complex ones.
ComplexExpansion to_complex(const SymmetricOperator &h);

/// All-to-all Heisenberg coupling sum_{a<b} (XX + YY + ZZ)_{ab}, scaled by J.
SymmetricOperator heisenberg(int n, double coupling = 1.0);

}  // namespace symsim
