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

#include <vector>

namespace fewnomial::polyhedra {

/// n! * Vol(conv(points)), by brute-force facet enumeration and a pulling
/// triangulation in 64/128-bit integers. Independent of the LP-based engine;
/// meant for small inputs only.
Integer normalized_volume_bruteforce(const std::vector<Point>& points, std::size_t n);

/// Mixed volume by inclusion-exclusion over sub-sums:
///   M = sum over nonempty S of (-1)^(n-|S|) Vol(sum_{i in S} Q_i).
/// Refuses (GuardrailError) when n > 4 or a sub-sum is too large.
Integer mixed_volume_polarization_oracle(const std::vector<Support>& supports);

}  // namespace fewnomial::polyhedra
