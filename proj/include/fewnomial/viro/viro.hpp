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

#pragma once

#include "fewnomial/polyhedra/lower_hull.hpp"
#include "fewnomial/polyhedra/triangulation.hpp"

#include <utility>
#include <vector>

namespace fewnomial::viro {

using polyhedra::Integer;
using polyhedra::LiftedSupport;
using polyhedra::MixedCell;
using polyhedra::Rational;
using polyhedra::Support;
using polyhedra::Triangulation;

/// One sign (+1 or -1) per support point, in support order.
using SignDistribution = std::vector<int>;
using Edge = std::pair<std::size_t, std::size_t>;

/// Edges of the triangulation whose endpoints carry opposite signs.
std::vector<Edge> alternating_edges(const Triangulation& tri, const SignDistribution& signs);

/// True when every summand edge of the cell alternates. A cell whose face
/// holds more than two collinear points is rejected: its edge is not an
/// edge of the induced triangulation.
bool is_alternating(const MixedCell& cell, const std::vector<SignDistribution>& signs);

std::size_t count_alternating_mixed_cells(const std::vector<MixedCell>& cells,
                                          const std::vector<SignDistribution>& signs);
std::size_t count_alternating_mixed_cells(const polyhedra::Subdivision& sub,
                                          const std::vector<SignDistribution>& signs);

/// Positive-root count of the deformed system sum c_a t^l(a) x^a for small
/// t > 0, together with the alternating cells that witness it.
struct SturmfelsCount {
    std::size_t count = 0;
    std::size_t mixed_cells = 0;
    std::vector<MixedCell> alternating;
};

/// Requires a mixed lifting tuple; throws InputError otherwise.
SturmfelsCount sturmfels_positive_count(const std::vector<LiftedSupport>& lifted,
                                        const std::vector<SignDistribution>& signs, int jobs = 0);

using RationalPoint = std::pair<Rational, Rational>;

struct ViroSegment {
    RationalPoint from, to;
    // An endpoint on the hull boundary is excluded from the diagram; the
    // segment itself is kept as the open segment.
    bool from_on_boundary = false;
    bool to_on_boundary = false;
    std::size_t cell = 0;  // index into the triangulation's simplices
};

struct ViroDiagram {
    Triangulation triangulation;
    SignDistribution signs;
    std::vector<ViroSegment> segments;
};

/// Midpoint hulls of alternating edges over every triangle of the coherent
/// triangulation. Only n = 2 is supported (DimensionError otherwise).
ViroDiagram viro_diagram_2d(const LiftedSupport& lifted, const SignDistribution& signs);

}  // namespace fewnomial::viro
