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

#include "fewnomial/polyhedra/triangulation.hpp"

#include "fewnomial/polyhedra/lower_hull.hpp"

namespace fewnomial::polyhedra {

Triangulation coherent_triangulation(const LiftedSupport& lifted) {
    const std::size_t n = lifted.base.dim();
    Triangulation t;
    t.support = lifted.base;
    t.lifting = lifted.lifting;
    for (const auto& f : lower_facets({lifted})) {
        const auto& cell = f.faces.front();
        if (cell.size() != n + 1) {
            std::string pts;
            for (auto i : cell) pts += (pts.empty() ? "" : ",") + std::to_string(i);
            throw NonSimplicialCell("lower facet {" + pts + "} is not a simplex; perturb the lifting", cell);
        }
        t.simplices.push_back(cell);
    }
    t.simplices = t.canonical();
    return t;
}

namespace {

RationalMatrix homogenized(const Support& support) {
    const std::size_t n = support.dim();
    RationalMatrix m(n + 1, RationalVector(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j) {
        m[0][j] = 1;
        for (std::size_t r = 0; r < n; ++r) m[r + 1][j] = support[j][r];
    }
    return m;
}

}  // namespace

IntegerVector circuit_relation(const Support& support) {
    const std::size_t n = support.dim();
    if (support.size() != n + 2) throw InputError("a circuit in dimension n has n+2 points");
    auto kernel = nullspace(homogenized(support), support.size());
    if (kernel.size() != 1) throw InputError("points do not span affinely, so they are not a circuit");
    IntegerVector b = primitive(kernel.front());
    for (const auto& x : b)
        if (x == 0) throw InputError("affine relation has a zero entry; not a circuit");
    return b;
}

Triangulation circuit_triangulation(const Support& support, const IntegerVector& b, int sign) {
    const IntegerVector ref = circuit_relation(support);
    if (b.size() != ref.size()) throw InputError("relation length does not match the support");
    // b must be a nonzero multiple of the primitive relation.
    Rational scale(b[0], ref[0]);
    scale.canonicalize();
    for (std::size_t i = 0; i < b.size(); ++i)
        if (Rational(b[i]) != scale * ref[i]) throw InputError("vector is not an affine relation of the support");
    if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
    Triangulation t;
    t.support = support;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (sgn(b[i]) * sign <= 0) continue;
        std::vector<std::size_t> s;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (j != i) s.push_back(j);
        t.simplices.push_back(std::move(s));
    }
    return t;
}

}  // namespace fewnomial::polyhedra
