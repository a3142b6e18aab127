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

#include "fewnomial/polyhedra/polarization.hpp"

#include "fewnomial/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fewnomial::polyhedra {

namespace {

using i128 = __int128;
using Idx = std::vector<std::size_t>;

constexpr std::size_t kMaxDim = 4;
constexpr std::size_t kMaxPoints = 2000;
constexpr double kMaxSubsets = 5e6;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        const i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Rank by fraction-free elimination.
std::size_t eliminate_rank(std::vector<std::vector<i128>> m, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const i128 a = m[r][c], b = m[i][c];
            i128 g = 0;
            for (std::size_t k = 0; k < cols; ++k) {
                m[i][k] = m[i][k] * a - m[r][k] * b;
                g = gcd128(g, m[i][k]);
            }
            if (g > 1)
                for (auto& x : m[i]) x /= g;
        }
        ++r;
    }
    return r;
}

i128 det_small(const std::vector<std::vector<i128>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    i128 total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        std::vector<std::vector<i128>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<i128> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(std::move(row));
        }
        const i128 term = a[0][c] * det_small(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

struct Hull {
    std::vector<Point> pts;
    std::size_t n;
    std::vector<Idx> facets;  // point sets, sorted

    std::vector<i128> diff(std::size_t a, std::size_t b) const {
        std::vector<i128> d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = static_cast<i128>(pts[a][c]) - pts[b][c];
        return d;
    }

    std::size_t affine_dim(const Idx& s) const {
        if (s.size() <= 1) return 0;
        std::vector<std::vector<i128>> m;
        for (std::size_t k = 1; k < s.size(); ++k) m.push_back(diff(s[k], s[0]));
        return eliminate_rank(std::move(m), n);
    }

    void find_facets() {
        const std::size_t m = pts.size();
        std::set<std::vector<i128>> seen;
        Idx pick(n);
        // Enumerate n-subsets in lexicographic order.
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<std::vector<i128>> d;
            for (std::size_t k = 1; k < n; ++k) d.push_back(diff(pick[k], pick[0]));
            std::vector<i128> normal(n);
            bool zero = true;
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<std::vector<i128>> minor;
                for (const auto& row : d) {
                    std::vector<i128> r;
                    for (std::size_t k = 0; k < n; ++k)
                        if (k != c) r.push_back(row[k]);
                    minor.push_back(std::move(r));
                }
                normal[c] = det_small(minor) * ((c % 2 == 0) ? 1 : -1);
                if (normal[c] != 0) zero = false;
            }
            if (!zero) {
                i128 g = 0;
                for (auto x : normal) g = gcd128(g, x);
                for (auto& x : normal) x /= g;
                i128 offset = 0;
                for (std::size_t c = 0; c < n; ++c) offset += normal[c] * pts[pick[0]][c];
                bool pos = false, neg = false;
                Idx on;
                for (std::size_t i = 0; i < m; ++i) {
                    i128 v = -offset;
                    for (std::size_t c = 0; c < n; ++c) v += normal[c] * pts[i][c];
                    if (v > 0) pos = true;
                    if (v < 0) neg = true;
                    if (v == 0) on.push_back(i);
                }
                if (!(pos && neg)) {
                    if (neg)
                        for (auto& x : normal) x = -x;
                    if (seen.insert(normal).second) facets.push_back(on);
                }
            }
            // Next combination.
            std::size_t k = n;
            while (k > 0 && pick[k - 1] == m - n + k - 1) --k;
            if (k == 0) break;
            ++pick[k - 1];
            for (std::size_t j = k; j < n; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    // Pulling triangulation of the face `s` of dimension `dim`.
    void pull(const Idx& s, std::size_t dim, Idx& prefix, std::vector<Idx>& out) const {
        if (dim == 0) {
            Idx simplex = prefix;
            simplex.push_back(s.front());
            out.push_back(std::move(simplex));
            return;
        }
        const std::size_t apex = s.front();
        std::set<Idx> subfaces;
        for (const auto& f : facets) {
            Idx t;
            std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(t));
            if (t.size() < dim || t == s) continue;
            if (std::binary_search(t.begin(), t.end(), apex)) continue;
            if (affine_dim(t) == dim - 1) subfaces.insert(std::move(t));
        }
        prefix.push_back(apex);
        for (const auto& t : subfaces) pull(t, dim - 1, prefix, out);
        prefix.pop_back();
    }
};

double binomial(std::size_t m, std::size_t k) {
    double r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(m - i) / static_cast<double>(i + 1);
    return r;
}

}  // namespace

Integer normalized_volume_bruteforce(const std::vector<Point>& points, std::size_t n) {
    if (n == 0 || n > kMaxDim) throw GuardrailError("brute-force volume supports dimensions 1 to 4");
    Hull h;
    h.n = n;
    std::set<Point> uniq;
    for (const auto& p : points) {
        if (p.size() != n) throw DimensionError("point has the wrong dimension");
        uniq.insert(p);
    }
    h.pts.assign(uniq.begin(), uniq.end());
    if (h.pts.size() > kMaxPoints || binomial(h.pts.size(), n) > kMaxSubsets)
        throw GuardrailError("brute-force volume input too large");
    Idx all(h.pts.size());
    std::iota(all.begin(), all.end(), 0);
    if (h.pts.size() < n + 1 || h.affine_dim(all) < n) return Integer(0);
    h.find_facets();
    std::vector<Idx> simplices;
    Idx prefix;
    h.pull(all, n, prefix, simplices);
    Integer total = 0;
    for (const auto& s : simplices) {
        std::vector<std::vector<i128>> m;
        for (std::size_t k = 1; k <= n; ++k) m.push_back(h.diff(s[k], s[0]));
        const i128 d = abs128(det_small(m));
        total += Integer(static_cast<long>(d));
    }
    return total;
}

Integer mixed_volume_polarization_oracle(const std::vector<Support>& supports) {
    const std::size_t n = supports.size();
    if (n == 0) throw InputError("need at least one support");
    if (n > kMaxDim) throw GuardrailError("polarization oracle supports n <= 4");
    for (const auto& s : supports)
        if (s.dim() != n) throw DimensionError("need n supports in dimension n");
    // Normalized volumes NV = n! Vol, so the inclusion-exclusion sum is
    // n! times the mixed volume.
    Integer acc = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Point> sum{Point(n, 0)};
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            ++count;
            std::set<Point> next;
            for (const auto& a : sum)
                for (const auto& b : supports[i].points()) {
                    Point c(n);
                    for (std::size_t k = 0; k < n; ++k) c[k] = a[k] + b[k];
                    next.insert(std::move(c));
                }
            if (next.size() > kMaxPoints) throw GuardrailError("Minkowski sub-sum too large for the oracle");
            sum.assign(next.begin(), next.end());
        }
        const Integer nv = normalized_volume_bruteforce(sum, n);
        if ((n - count) % 2 == 0)
            acc += nv;
        else
            acc -= nv;
    }
    Integer fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<long>(k);
    if (acc % fact != 0) throw Error("polarization sum not divisible by n!");
    return Integer(acc / fact);
}

}  // namespace fewnomial::polyhedra
