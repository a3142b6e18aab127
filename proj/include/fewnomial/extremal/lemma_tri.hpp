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

#include <array>
#include <string>
#include <vector>

namespace fewnomial::extremal {

using polyhedra::IntegerVector;
using polyhedra::LiftedSupport;
using polyhedra::LowerFacet;

/// The lifted triangles: T_1 = {e_(n+1), 2e_1, e_1+e_2} and, for i >= 2,
/// T_i = {O, 2e_1 + (2i-3)e_(n+1), e_i+e_(i+1)} (e_n for i = n), stored as
/// supports in Z^n with heights. Point order is (alpha, beta, gamma).
std::vector<LiftedSupport> lemma_triangles(std::size_t n);

/// v_j = e_(n+1) + e_1 - sum_{i <= j} (j+1-i) e_i as an (n+1)-vector.
IntegerVector lemma_normal(std::size_t n, std::size_t j);

struct NamedCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct LemmaTriCertificate {
    std::size_t n = 0;
    std::size_t lower_facet_count = 0;
    std::vector<LowerFacet> mixed_facets;       // ordered by j
    std::vector<polyhedra::Integer> volumes;    // of the projected cells
    polyhedra::Integer mixed_volume = 0;
    // pairings[j][i] = (v_j.alpha_i, v_j.beta_i, v_j.gamma_i), i and j 0-based.
    std::vector<std::vector<std::array<polyhedra::Integer, 3>>> pairings;
    std::vector<NamedCheck> checks;

    bool certified() const;
    /// Names of failed checks, empty when certified.
    std::vector<std::string> failures() const;
};

/// Runs the full lower-hull computation and checks: n+1 mixed lower facets,
/// the face pattern E_{1,1}+...+E_{j,1}+E_{j+1,0}+...+E_{n,0}, unit
/// volumes, normals v_j, mixed volume n+1, and the closed-form pairings.
LemmaTriCertificate lemma_tri_certificate(std::size_t n);

}  // namespace fewnomial::extremal
