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

#include "fewnomial/polyhedra/linalg.hpp"

#include "fewnomial/error.hpp"

namespace fewnomial::polyhedra {

std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < m[row].size(); ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t j = col; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m, std::size_t columns) { return row_reduce(m, columns).size(); }

std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t columns) {
    const auto pivots = row_reduce(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(columns, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(RationalMatrix m, const RationalVector& b, std::size_t columns) {
    for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
    const auto pivots = row_reduce(m, columns + 1);
    if (!pivots.empty() && pivots.back() == columns) return std::nullopt;
    RationalVector x(columns, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][columns];
    return x;
}

Integer determinant(std::vector<IntegerVector> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sgn * a[n - 1][n - 1];
}

IntegerVector primitive(const RationalVector& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector out;
    Integer g = 0;
    for (const auto& x : v) {
        Rational s = x * l;
        out.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    }
    if (g == 0) throw InputError("primitive vector of the zero vector");
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace fewnomial::polyhedra
