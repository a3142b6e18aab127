/*
   Copyright 2026 The fewnomial authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fewnomial/nonarch/nonarch.hpp"

#include "fewnomial/numeric/series.hpp"
#include "fewnomial/polyhedra/linalg.hpp"

namespace fewnomial::nonarch::detail {

namespace {

constexpr double kMaxResidueTuples = 2e6;

// prod_j theta_j^{row_j} in F_p^*, exponents of either sign.
Residue monomial_residue(const IntegerVector& row, const PhaseVector& theta, unsigned long p) {
    Residue acc = 1;
    for (std::size_t j = 0; j < row.size(); ++j) {
        Integer e = row[j] % Integer(static_cast<unsigned long>(p - 1));
        if (e < 0) e += static_cast<unsigned long>(p - 1);
        acc = acc * numeric::mod_pow(theta[j], e.get_ui(), p) % p;
    }
    return acc;
}

bool satisfies(const BinomialData& d, const PhaseVector& theta) {
    for (std::size_t i = 0; i < d.exponent_matrix.size(); ++i)
        if (monomial_residue(d.exponent_matrix[i], theta, d.p) != d.residue_rhs[i]) return false;
    return true;
}

// Inverse of a unimodular integer matrix, column by column.
std::vector<IntegerVector> unimodular_inverse(const std::vector<IntegerVector>& m) {
    const std::size_t n = m.size();
    polyhedra::RationalMatrix q(n, polyhedra::RationalVector(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) q[r][c] = m[r][c];
    std::vector<IntegerVector> inv(n, IntegerVector(n));
    for (std::size_t c = 0; c < n; ++c) {
        polyhedra::RationalVector e(n, 0);
        e[c] = 1;
        auto x = polyhedra::solve(q, e, n);
        if (!x) throw Error("unimodular matrix failed to invert");
        for (std::size_t r = 0; r < n; ++r) {
            if ((*x)[r].get_den() != 1) throw Error("inverse of a unimodular matrix is not integral");
            inv[r][c] = (*x)[r].get_num();
        }
    }
    return inv;
}

}  // namespace

std::vector<RootClass> solve_binomial_data(const BinomialData& d, const std::optional<PhaseVector>& target) {
    const std::size_t n = d.exponent_matrix.size();
    const Integer det = polyhedra::determinant(d.exponent_matrix);
    if (det == 0) throw InputError("exponent matrix of the binomial system is singular");

    polyhedra::RationalMatrix q(n, polyhedra::RationalVector(n));
    polyhedra::RationalVector rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) q[r][c] = d.exponent_matrix[r][c];
        rhs[r] = d.valuation_rhs[r];
    }
    const auto v = polyhedra::solve(q, rhs, n);
    std::vector<Integer> valuation;
    for (const auto& x : *v) {
        if (x.get_den() != 1) return {};  // roots live in a ramified extension only
        valuation.push_back(x.get_num());
    }
    if (target) {
        if (target->size() != n) throw InputError("phase vector must have n entries");
        for (auto r : *target)
            if (r == 0 || r >= d.p) throw InputError("phase entries must be nonzero residues");
    }

    std::vector<RootClass> out;
    if (abs(det) == 1) {
        // theta = r^(M^-1): the residue solution is unique.
        const auto inv = unimodular_inverse(d.exponent_matrix);
        PhaseVector theta(n);
        for (std::size_t j = 0; j < n; ++j) theta[j] = monomial_residue(inv[j], d.residue_rhs, d.p);
        if (!satisfies(d, theta)) throw Error("unimodular phase solution failed verification");
        if (!target || *target == theta) out.push_back({valuation, theta, 1});
        return out;
    }
    if (det % Integer(d.p) == 0)
        throw InputError("residue characteristic divides the exponent determinant; phases may not lift uniquely");
    if (target) {
        if (satisfies(d, *target)) out.push_back({valuation, *target, 1});
        return out;
    }
    double tuples = 1;
    for (std::size_t j = 0; j < n; ++j) tuples *= static_cast<double>(d.p - 1);
    if (tuples > kMaxResidueTuples) throw GuardrailError("too many residue tuples to enumerate");
    PhaseVector theta(n, 1);
    while (true) {
        if (satisfies(d, theta)) out.push_back({valuation, theta, 1});
        std::size_t k = 0;
        while (k < n && theta[k] == d.p - 1) theta[k++] = 1;
        if (k == n) break;
        ++theta[k];
    }
    return out;
}

}  // namespace fewnomial::nonarch::detail
