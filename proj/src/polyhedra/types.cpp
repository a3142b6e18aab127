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

#include "fewnomial/polyhedra/types.hpp"

#include "fewnomial/error.hpp"

#include <algorithm>
#include <set>

namespace fewnomial::polyhedra {

Support::Support(std::size_t n, std::vector<Point> points) : n_(n) {
    if (n == 0) throw DimensionError("supports need ambient dimension >= 1");
    if (points.empty()) throw InputError("empty support");
    std::set<Point> seen;
    for (auto& p : points) {
        if (p.size() != n)
            throw DimensionError("support point has " + std::to_string(p.size()) + " coordinates, expected " +
                                 std::to_string(n));
        if (seen.insert(p).second) points_.push_back(std::move(p));
    }
}

std::size_t Support::find(const Point& p) const {
    auto it = std::find(points_.begin(), points_.end(), p);
    return static_cast<std::size_t>(it - points_.begin());
}

LiftedSupport::LiftedSupport(Support s, std::vector<Rational> heights)
    : base(std::move(s)), lifting(std::move(heights)) {
    if (lifting.size() != base.size())
        throw InputError("lifting has " + std::to_string(lifting.size()) + " values for " +
                         std::to_string(base.size()) + " points");
}

LiftedSupport LiftedSupport::flat(Support s) {
    std::vector<Rational> zero(s.size(), Rational(0));
    return LiftedSupport(std::move(s), std::move(zero));
}

RationalVector LiftedSupport::lifted_point(std::size_t i) const {
    RationalVector v;
    for (long x : base[i]) v.emplace_back(x);
    v.push_back(lifting[i]);
    return v;
}

std::size_t LowerFacet::dimension_sum() const {
    std::size_t s = 0;
    for (auto d : face_dims) s += d;
    return s;
}

Integer Triangulation::normalized_volume(std::size_t i) const {
    const auto& s = simplices.at(i);
    const std::size_t n = support.dim();
    if (s.size() != n + 1) throw InputError("simplex with wrong vertex count");
    std::vector<IntegerVector> m;
    for (std::size_t k = 1; k <= n; ++k) {
        IntegerVector row;
        for (std::size_t c = 0; c < n; ++c) row.emplace_back(support[s[k]][c] - support[s[0]][c]);
        m.push_back(std::move(row));
    }
    return abs(determinant(std::move(m)));
}

std::vector<std::vector<std::size_t>> Triangulation::canonical() const {
    auto out = simplices;
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Triangulation::edges() const {
    std::set<std::pair<std::size_t, std::size_t>> e;
    for (const auto& s : simplices)
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b) e.insert(std::minmax(s[a], s[b]));
    return {e.begin(), e.end()};
}

bool lex_less(const IntegerVector& a, const IntegerVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace fewnomial::polyhedra
