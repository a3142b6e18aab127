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

#include "fewnomial/viro/viro.hpp"

#include "fewnomial/error.hpp"

#include <map>
#include <set>

namespace fewnomial::viro {

namespace {

void check_signs(const SignDistribution& signs, std::size_t size) {
    if (signs.size() != size) throw InputError("need exactly one sign per support point");
    for (int s : signs)
        if (s != 1 && s != -1) throw InputError("signs must be +1 or -1");
}

}  // namespace

std::vector<Edge> alternating_edges(const Triangulation& tri, const SignDistribution& signs) {
    check_signs(signs, tri.support.size());
    std::vector<Edge> out;
    for (const auto& e : tri.edges())
        if (signs[e.first] != signs[e.second]) out.push_back(e);
    return out;
}

bool is_alternating(const MixedCell& cell, const std::vector<SignDistribution>& signs) {
    if (signs.size() != cell.edges.size()) throw InputError("need one sign distribution per support");
    for (std::size_t i = 0; i < cell.edges.size(); ++i) {
        if (cell.faces[i].size() != 2)
            throw InputError("mixed cell face has collinear interior points; the lifting is not generic");
        const auto [a, b] = cell.edges[i];
        if (a >= signs[i].size() || b >= signs[i].size()) throw InputError("sign distribution too short");
        if (signs[i][a] == signs[i][b]) return false;
    }
    return true;
}

std::size_t count_alternating_mixed_cells(const std::vector<MixedCell>& cells,
                                          const std::vector<SignDistribution>& signs) {
    std::size_t count = 0;
    for (const auto& c : cells)
        if (is_alternating(c, signs)) ++count;
    return count;
}

std::size_t count_alternating_mixed_cells(const polyhedra::Subdivision& sub,
                                          const std::vector<SignDistribution>& signs) {
    if (signs.size() != sub.lifted.size()) throw InputError("need one sign distribution per support");
    for (std::size_t i = 0; i < signs.size(); ++i) check_signs(signs[i], sub.lifted[i].size());
    return count_alternating_mixed_cells(polyhedra::mixed_cells(sub), signs);
}

SturmfelsCount sturmfels_positive_count(const std::vector<LiftedSupport>& lifted,
                                        const std::vector<SignDistribution>& signs, int jobs) {
    if (signs.size() != lifted.size()) throw InputError("need one sign distribution per support");
    for (std::size_t i = 0; i < signs.size(); ++i) check_signs(signs[i], lifted[i].size());
    if (!polyhedra::is_mixed_tuple(lifted).mixed)
        throw InputError("lifting tuple is not mixed; the alternating-cell count is undefined");
    SturmfelsCount out;
    auto cells = polyhedra::enumerate_mixed_cells(lifted, jobs);
    out.mixed_cells = cells.size();
    for (auto& c : cells)
        if (is_alternating(c, signs)) out.alternating.push_back(std::move(c));
    out.count = out.alternating.size();
    return out;
}

ViroDiagram viro_diagram_2d(const LiftedSupport& lifted, const SignDistribution& signs) {
    if (lifted.base.dim() != 2) throw DimensionError("Viro diagrams are emitted for n = 2 only");
    check_signs(signs, lifted.size());
    ViroDiagram d;
    d.triangulation = polyhedra::coherent_triangulation(lifted);
    d.signs = signs;
    // An edge lies on the hull boundary iff exactly one triangle uses it.
    std::map<Edge, int> uses;
    for (const auto& s : d.triangulation.simplices)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) ++uses[std::minmax(s[a], s[b])];
    const auto& pts = lifted.base;
    auto midpoint = [&](Edge e) {
        return RationalPoint{Rational(pts[e.first][0] + pts[e.second][0], 2),
                             Rational(pts[e.first][1] + pts[e.second][1], 2)};
    };
    for (std::size_t c = 0; c < d.triangulation.simplices.size(); ++c) {
        const auto& s = d.triangulation.simplices[c];
        std::vector<Edge> alt;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b)
                if (signs[s[a]] != signs[s[b]]) alt.push_back(std::minmax(s[a], s[b]));
        // A signed triangle has zero or two alternating edges.
        if (alt.empty()) continue;
        ViroSegment seg;
        seg.from = midpoint(alt[0]);
        seg.to = midpoint(alt[1]);
        for (auto* q : {&seg.from, &seg.to}) {
            q->first.canonicalize();
            q->second.canonicalize();
        }
        seg.from_on_boundary = uses[alt[0]] == 1;
        seg.to_on_boundary = uses[alt[1]] == 1;
        seg.cell = c;
        d.segments.push_back(std::move(seg));
    }
    return d;
}

}  // namespace fewnomial::viro
