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

#include "fewnomial/numeric/rational.hpp"

#include <optional>
#include <vector>

namespace fewnomial::polyhedra {

using numeric::Integer;
using numeric::Rational;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major
using IntegerVector = std::vector<Integer>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns);

std::size_t rank(RationalMatrix m, std::size_t columns);

/// Basis of {x : M x = 0} as columns, one vector per free variable.
std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t columns);

/// Some solution of M x = b, or nullopt when inconsistent.
std::optional<RationalVector> solve(RationalMatrix m, const RationalVector& b, std::size_t columns);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Integer determinant(std::vector<IntegerVector> m);

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction.
IntegerVector primitive(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace fewnomial::polyhedra
