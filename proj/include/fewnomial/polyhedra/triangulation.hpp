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

#include "fewnomial/error.hpp"
#include "fewnomial/polyhedra/types.hpp"

#include <vector>

namespace fewnomial::polyhedra {

/// Raised when a lifting induces a lower facet that is not a simplex.
class NonSimplicialCell : public InputError {
public:
    NonSimplicialCell(const std::string& what, std::vector<std::size_t> cell)
        : InputError(what), cell_(std::move(cell)) {}
    const std::vector<std::size_t>& cell() const noexcept { return cell_; }

private:
    std::vector<std::size_t> cell_;
};

/// Projected lower facets of one lifted full-dimensional support. Throws
/// NonSimplicialCell when some facet holds more than n+1 points.
Triangulation coherent_triangulation(const LiftedSupport& lifted);

/// Primitive integer affine relation b of n+2 points (sum b_i a_i = 0,
/// sum b_i = 0). Throws InputError unless the points form a circuit whose
/// relation has no zero entry.
IntegerVector circuit_relation(const Support& support);

/// The triangulation {Q(i) : sign * b_i > 0} of a circuit, where Q(i) drops
/// point i. b must be an affine relation of the support.
Triangulation circuit_triangulation(const Support& support, const IntegerVector& b, int sign = 1);

}  // namespace fewnomial::polyhedra
