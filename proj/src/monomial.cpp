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

#include "symsim/monomial.hpp"

#include "symsim/combinatorics.hpp"

namespace symsim {

std::string MonomialIndex::str() const {
    return "(" + std::to_string(i1) + "," + std::to_string(ix) + "," + std::to_string(iy) + "," +
           std::to_string(iz) + ")";
}

void validate_monomial(const MonomialIndex &i, int n) {
    if (i.i1 < 0 || i.ix < 0 || i.iy < 0 || i.iz < 0) {
        throw ValidationError("monomial " + i.str() + " has a negative component");
    }
    if (i.n() != n) {
        throw ValidationError("monomial components sum to " + std::to_string(i.n()) + " != " + std::to_string(n));
    }
}

std::vector<MonomialIndex> enumerate_monomials(int n) {
    if (n < 1) {
        throw ValidationError("invalid system size n=" + std::to_string(n));
    }
    std::vector<MonomialIndex> out;
    out.reserve(monomial_count(n));
    for (int a = 0; a <= n; a++) {
        for (int b = 0; a + b <= n; b++) {
            for (int c = 0; a + b + c <= n; c++) {
                out.push_back({a, b, c, n - a - b - c});
            }
        }
    }
    return out;
}

std::size_t monomial_count(int n) {
    if (n < 0) {
        return 0;
    }
    return static_cast<std::size_t>(binomial_u64(n + 3, 3));
}

std::size_t monomial_rank(const MonomialIndex &i) {
    const int n = i.n();
    std::size_t rank = 0;
    // Tuples whose first entry is a < i1: (n-a+2 choose 2) each.
    for (int a = 0; a < i.i1; a++) {
        rank += static_cast<std::size_t>(binomial_u64(n - a + 2, 2));
    }
    const int rest = n - i.i1;
    for (int b = 0; b < i.ix; b++) {
        rank += static_cast<std::size_t>(rest - b + 1);
    }
    rank += static_cast<std::size_t>(i.iy);
    return rank;
}

mpz_class class_size(const MonomialIndex &i) {
    Factorials f(i.n());
    return f.multinomial(i.n(), {i.i1, i.ix, i.iy, i.iz});
}

double class_size_double(const MonomialIndex &i) {
    return class_size(i).get_d();
}

ComplexExpansion to_complex(const SymmetricOperator &h) {
    ComplexExpansion out(h.n());
    for (const auto &[i, c] : h.terms()) {
        out.add(i, {c, 0.0});
    }
    return out;
}

SymmetricOperator heisenberg(int n, double coupling) {
    if (n < 2) {
        throw ValidationError("Heisenberg coupling needs n >= 2");
    }
    SymmetricOperator h(n);
    h.add({n - 2, 2, 0, 0}, coupling);
    h.add({n - 2, 0, 2, 0}, coupling);
    h.add({n - 2, 0, 0, 2}, coupling);
    return h;
}

}  // namespace symsim
