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

#include "fewnomial/polyhedra/types.hpp"

#include <optional>
#include <vector>

namespace fewnomial::polyhedra {

/// A lower face of one lifted support: the indices it contains and its
/// dimension.
struct SupportFace {
    std::vector<std::size_t> points;
    std::size_t dim = 0;
};

/// Every lower face of a single lifted support, all dimensions.
std::vector<SupportFace> lower_faces(const LiftedSupport& s);

/// Lower faces of dimension one; a face may hold more than two collinear
/// points.
std::vector<SupportFace> lower_edges(const LiftedSupport& s);

/// Facets of the lower hull of the lifted Minkowski sum, sorted
/// lexicographically by primitive normal. Any number of supports sharing
/// one ambient dimension is accepted. Throws DimensionError when the sum
/// is not full-dimensional.
std::vector<LowerFacet> lower_facets(const std::vector<LiftedSupport>& lifted);

Subdivision induced_subdivision(const std::vector<LiftedSupport>& lifted);

struct MixedCheck {
    bool mixed = false;
    std::optional<LowerFacet> witness;  // an offending facet when not mixed
};

/// True iff every lower facet F_1 + ... + F_n has dim F_1 + ... + dim F_n = n.
MixedCheck is_mixed_tuple(const std::vector<LiftedSupport>& lifted);

/// Mixed cells of a subdivision built from a mixed tuple.
std::vector<MixedCell> mixed_cells(const Subdivision& sub);

/// Mixed cells found directly by a depth-first search over lower edges,
/// pruned by exact LP feasibility. The first search level is distributed
/// over OpenMP threads (jobs <= 0 means the runtime default). Output order
/// is lexicographic by normal regardless of thread count.
std::vector<MixedCell> enumerate_mixed_cells(const std::vector<LiftedSupport>& lifted, int jobs = 0);

/// Single-threaded reference for enumerate_mixed_cells.
std::vector<MixedCell> enumerate_mixed_cells_serial(const std::vector<LiftedSupport>& lifted);

struct MixedVolumeResult {
    Integer value;
    bool perturbed = false;
    std::vector<LiftedSupport> lifting_used;
};

/// Sum of mixed-cell volumes. A non-mixed tuple of explicit liftings is
/// rejected with its offending facet unless allow_perturb is set; then heights are perturbed by delta * w with fixed
/// pseudo-random integer weights w and an exact rational delta, and the
/// perturbed tuple is verified to be mixed before its cells are summed.
/// Without liftings a perturbation of the zero lifting is used.
MixedVolumeResult mixed_volume(const std::vector<Support>& supports,
                               const std::optional<std::vector<std::vector<Rational>>>& liftings = std::nullopt,
                               bool allow_perturb = false, int jobs = 0);

/// Volume of the mixed cell spanned by the given edges.
Integer edge_volume(const std::vector<LiftedSupport>& lifted,
                    const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace fewnomial::polyhedra
