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
#include "fewnomial/viro/viro.hpp"

#include <optional>
#include <string>

namespace fewnomial::io {

// Plane pictures, SVG 1.1. One lattice unit is 40 px, the canvas is the
// bounding box plus a 40 px margin, and y grows upwards. Output depends
// only on the input, so equal inputs give identical bytes.

/// Cells of a planar mixed subdivision; mixed cells are filled.
std::string subdivision_svg(const polyhedra::Subdivision& sub);

/// Simplices of a planar triangulation, vertices labelled by sign if given.
std::string triangulation_svg(const polyhedra::Triangulation& tri,
                              const std::optional<viro::SignDistribution>& signs = std::nullopt);

/// Hull of the support, the sign at each point and the Viro segments.
std::string viro_svg(const viro::ViroDiagram& diagram);

}  // namespace fewnomial::io
