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
#include <utility>
#include <vector>

namespace fewnomial::polyhedra {

using Point = std::vector<long>;

/// Finite point set in Z^n. Duplicates are dropped, first occurrence wins.
class Support {
public:
    Support() = default;
    Support(std::size_t n, std::vector<Point> points);

    std::size_t dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const noexcept { return points_; }
    /// Index of p, or size() when absent.
    std::size_t find(const Point& p) const;

    friend bool operator==(const Support&, const Support&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Point> points_;
};

/// A support with one rational height per point.
struct LiftedSupport {
    Support base;
    std::vector<Rational> lifting;

    LiftedSupport() = default;
    LiftedSupport(Support s, std::vector<Rational> heights);
    static LiftedSupport flat(Support s);

    std::size_t size() const noexcept { return base.size(); }
    /// (a, l(a)) as a rational vector in Q^(n+1).
    RationalVector lifted_point(std::size_t i) const;
};

/// Lower facet of a lifted Minkowski sum. `normal` is the primitive inner
/// normal (v, w) with w > 0; faces[i] lists the indices of support i that
/// minimise the normal's inner product.
struct LowerFacet {
    IntegerVector normal;
    std::vector<std::vector<std::size_t>> faces;
    std::vector<std::size_t> face_dims;
    bool is_mixed = false;  // every summand is an edge

    std::size_t dimension_sum() const;
};

/// Mixed cell: one edge (endpoint indices) per support, plus the full
/// minimising face in case it holds further collinear points.
struct MixedCell {
    IntegerVector normal;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> faces;
    Integer volume;
};

struct Subdivision {
    std::vector<LiftedSupport> lifted;
    std::vector<LowerFacet> cells;
};

/// Simplices of one support, as index sets into it.
struct Triangulation {
    Support support;
    std::vector<std::vector<std::size_t>> simplices;
    std::optional<std::vector<Rational>> lifting;

    /// n! times the Euclidean volume of simplex i.
    Integer normalized_volume(std::size_t i) const;
    /// Canonical form for comparisons: sorted simplices, each sorted.
    std::vector<std::vector<std::size_t>> canonical() const;
    /// Undirected edges of all simplices, sorted and deduplicated.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

bool lex_less(const IntegerVector& a, const IntegerVector& b);

}  // namespace fewnomial::polyhedra
