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

#include "fewnomial/polyhedra/linalg.hpp"

#include <optional>

namespace fewnomial::polyhedra {

/// Rows a.x (=, >=, >) b over Q^dim.
struct LinearSystem {
    std::size_t dim = 0;
    RationalMatrix eq_a, ge_a, gt_a;
    RationalVector eq_b, ge_b, gt_b;

    void equal(RationalVector a, Rational b) { eq_a.push_back(std::move(a)), eq_b.push_back(std::move(b)); }
    void at_least(RationalVector a, Rational b) { ge_a.push_back(std::move(a)), ge_b.push_back(std::move(b)); }
    void greater(RationalVector a, Rational b) { gt_a.push_back(std::move(a)), gt_b.push_back(std::move(b)); }
};

/// A point satisfying every row, or nullopt if none exists. Exact: strict
/// rows are handled by homogenising and maximising a common slack with the
/// simplex method (Bland's rule, so it always terminates).
std::optional<RationalVector> find_point(const LinearSystem& system);

inline bool feasible(const LinearSystem& system) { return find_point(system).has_value(); }

}  // namespace fewnomial::polyhedra
