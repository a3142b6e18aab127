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

#include "fewnomial/polyhedra/lp.hpp"

#include "fewnomial/error.hpp"

namespace fewnomial::polyhedra {

namespace {

// Dense tableau for max c.y s.t. M y <= h, y >= 0 with h >= 0, so the
// slack basis is feasible from the start.
class Tableau {
public:
    Tableau(const RationalMatrix& m, const RationalVector& h, std::size_t objective_column)
        : rows_(m.size()), cols_(m.empty() ? 0 : m[0].size()) {
        t_.assign(rows_ + 1, RationalVector(cols_ + rows_ + 1, Rational(0)));
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) t_[r][c] = m[r][c];
            t_[r][cols_ + r] = 1;
            t_[r].back() = h[r];
            basis_.push_back(cols_ + r);
        }
        // Objective row holds reduced costs as -c.
        t_[rows_][objective_column] = -1;
        objective_ = objective_column;
    }

    // Runs until the objective variable turns positive or is proven 0.
    bool objective_positive() {
        for (;;) {
            if (current(objective_) > 0) return true;
            std::size_t enter = SIZE_MAX;
            for (std::size_t c = 0; c + 1 < t_[rows_].size(); ++c)
                if (t_[rows_][c] < 0) {
                    enter = c;
                    break;
                }
            if (enter == SIZE_MAX) return false;
            std::size_t leave = SIZE_MAX;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (t_[r][enter] <= 0) continue;
                Rational ratio = t_[r].back() / t_[r][enter];
                if (leave == SIZE_MAX || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave == SIZE_MAX) throw Error("internal: unbounded LP despite the s <= 1 row");
            pivot(leave, enter);
        }
    }

    Rational current(std::size_t var) const {
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] == var) return t_[r].back();
        return 0;
    }

private:
    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = 1 / t_[row][col];
        for (auto& x : t_[row]) x *= inv;
        for (std::size_t r = 0; r <= rows_; ++r) {
            if (r == row || t_[r][col] == 0) continue;
            const Rational f = t_[r][col];
            for (std::size_t c = 0; c < t_[r].size(); ++c)
                if (t_[row][c] != 0) t_[r][c] -= f * t_[row][c];
        }
        basis_[row] = col;
    }

    std::size_t rows_, cols_, objective_ = 0;
    RationalMatrix t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<RationalVector> find_point(const LinearSystem& sys) {
    const std::size_t d = sys.dim;
    // Homogenise: (x, t) with x = y / t, t > 0. Equalities become a
    // subspace (y, t) = K z.
    std::vector<RationalVector> kernel;
    if (sys.eq_a.empty()) {
        for (std::size_t i = 0; i <= d; ++i) {
            RationalVector e(d + 1, Rational(0));
            e[i] = 1;
            kernel.push_back(std::move(e));
        }
    } else {
        RationalMatrix m;
        for (std::size_t r = 0; r < sys.eq_a.size(); ++r) {
            RationalVector row = sys.eq_a[r];
            row.push_back(-sys.eq_b[r]);
            m.push_back(std::move(row));
        }
        kernel = nullspace(std::move(m), d + 1);
        if (kernel.empty()) return std::nullopt;
    }
    const std::size_t k = kernel.size();
    auto project = [&](const RationalVector& a, const Rational& b) {
        // Coefficients of (a, -b).(y, t) in terms of z.
        RationalVector out(k, Rational(0));
        for (std::size_t j = 0; j < k; ++j) {
            Rational s = -b * kernel[j][d];
            for (std::size_t i = 0; i < d; ++i)
                if (a[i] != 0) s += a[i] * kernel[j][i];
            out[j] = s;
        }
        return out;
    };
    // Columns: z+ (k), z- (k), s (1). Rows: -(g.z) <= 0, -(h.z) + s <= 0,
    // -t + s <= 0, s <= 1.
    const std::size_t cols = 2 * k + 1, s_col = 2 * k;
    RationalMatrix m;
    RationalVector h;
    auto add_row = [&](const RationalVector& g, bool with_s) {
        RationalVector row(cols, Rational(0));
        for (std::size_t j = 0; j < k; ++j) {
            row[j] = -g[j];
            row[k + j] = g[j];
        }
        if (with_s) row[s_col] = 1;
        m.push_back(std::move(row));
        h.emplace_back(0);
    };
    for (std::size_t r = 0; r < sys.ge_a.size(); ++r) add_row(project(sys.ge_a[r], sys.ge_b[r]), false);
    for (std::size_t r = 0; r < sys.gt_a.size(); ++r) add_row(project(sys.gt_a[r], sys.gt_b[r]), true);
    RationalVector t_coeff(k);
    for (std::size_t j = 0; j < k; ++j) t_coeff[j] = kernel[j][d];
    add_row(t_coeff, true);
    {
        RationalVector row(cols, Rational(0));
        row[s_col] = 1;
        m.push_back(std::move(row));
        h.emplace_back(1);
    }
    Tableau tab(m, h, s_col);
    if (!tab.objective_positive()) return std::nullopt;
    // Recover a witness from the basic solution.
    RationalVector z(k);
    for (std::size_t j = 0; j < k; ++j) z[j] = tab.current(j) - tab.current(k + j);
    Rational t = 0;
    for (std::size_t j = 0; j < k; ++j) t += z[j] * kernel[j][d];
    if (t <= 0) throw Error("internal: LP witness with nonpositive homogenising coordinate");
    RationalVector x(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) x[i] += z[j] * kernel[j][i];
        x[i] /= t;
    }
    return x;
}

}  // namespace fewnomial::polyhedra
