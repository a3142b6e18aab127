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
#include "fewnomial/numeric/local_field.hpp"
#include "fewnomial/polyhedra/lower_hull.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fewnomial::nonarch {

using polyhedra::Integer;
using polyhedra::IntegerVector;
using polyhedra::LiftedSupport;
using polyhedra::Point;
using polyhedra::Rational;
using polyhedra::Support;
using Residue = std::uint64_t;
using PhaseVector = std::vector<Residue>;

template <class T>
struct Term {
    Point exp;
    T coeff;
};

/// Sparse Laurent polynomial in n variables over a non-Archimedean field.
template <class T>
struct ValuedPolynomial {
    std::size_t n = 0;
    std::vector<Term<T>> terms;
};

/// c1 x^a1 + c2 x^a2.
template <class T>
struct Binomial {
    Term<T> first, second;
};

template <class T>
using BinomialSystem = std::vector<Binomial<T>>;

/// Roots with ord = valuation and generalized phase = phase; count of them.
struct RootClass {
    std::vector<Integer> valuation;
    PhaseVector phase;
    long count = 0;
};

/// Support = exponents, lifting = coefficient valuations.
template <numeric::NonArchimedean T>
LiftedSupport newton_polytope_val(const ValuedPolynomial<T>& f) {
    if (f.terms.empty()) throw InputError("zero polynomial has no Newton polytope");
    std::vector<Point> pts;
    std::vector<Rational> heights;
    for (const auto& t : f.terms) {
        if (t.exp.size() != f.n) throw DimensionError("exponent vector has the wrong length");
        if (t.coeff.is_zero()) throw InputError("coefficient is zero at the stated precision");
        pts.push_back(t.exp);
        heights.emplace_back(t.coeff.valuation());
    }
    Support s(f.n, pts);
    if (s.size() != pts.size()) throw InputError("repeated exponent vector; combine like terms first");
    return LiftedSupport(std::move(s), std::move(heights));
}

/// Terms of f minimising <v, a> + w ord(c) for normal = (v, w), w > 0.
template <numeric::NonArchimedean T>
ValuedPolynomial<T> lower_polynomial(const ValuedPolynomial<T>& f, const IntegerVector& normal) {
    if (normal.size() != f.n + 1) throw DimensionError("normal must have n+1 entries");
    if (normal.back() <= 0) throw InputError("normal is not a lower normal (last entry must be positive)");
    std::vector<Integer> vals;
    for (const auto& t : f.terms) {
        if (t.coeff.is_zero()) throw InputError("coefficient is zero at the stated precision");
        Integer s = normal.back() * t.coeff.valuation();
        for (std::size_t c = 0; c < f.n; ++c) s += normal[c] * t.exp[c];
        vals.push_back(s);
    }
    const Integer m = *std::min_element(vals.begin(), vals.end());
    ValuedPolynomial<T> out{f.n, {}};
    for (std::size_t k = 0; k < vals.size(); ++k)
        if (vals[k] == m) out.terms.push_back(f.terms[k]);
    return out;
}

template <numeric::NonArchimedean T>
std::vector<ValuedPolynomial<T>> lower_system_for_normal(const std::vector<ValuedPolynomial<T>>& system,
                                                         const IntegerVector& normal) {
    std::vector<ValuedPolynomial<T>> out;
    for (const auto& f : system) out.push_back(lower_polynomial(f, normal));
    return out;
}

namespace detail {

/// Integer data of a binomial system: rows a_i - b_i, the valuation right
/// side ord(c2) - ord(c1) and the residue of -c2/c1.
struct BinomialData {
    std::vector<IntegerVector> exponent_matrix;
    std::vector<Integer> valuation_rhs;
    PhaseVector residue_rhs;
    unsigned long p = 0;
};

std::vector<RootClass> solve_binomial_data(const BinomialData& data, const std::optional<PhaseVector>& target);

}  // namespace detail

/// Root classes of c1 x^a + c2 x^b = 0 (one binomial per variable). The
/// valuation is the unique rational solution of M v = ord(c2/c1) and is
/// returned only when integral. Phases solve theta^M = phase(-c2/c1) over
/// F_p. A unimodular M gives a unique phase; otherwise residues are
/// enumerated, which needs p not dividing det M (each residue solution then
/// lifts to exactly one root). With a target only that phase is returned.
template <numeric::NonArchimedean T>
std::vector<RootClass> solve_binomial_system_phase(const BinomialSystem<T>& system,
                                                   const std::optional<PhaseVector>& target = std::nullopt) {
    const std::size_t n = system.size();
    if (n == 0) throw InputError("empty binomial system");
    detail::BinomialData d;
    for (const auto& b : system) {
        if (b.first.exp.size() != n || b.second.exp.size() != n)
            throw DimensionError("need n binomials in n variables");
        if (b.first.coeff.is_zero() || b.second.coeff.is_zero())
            throw InputError("binomial coefficient is zero at the stated precision");
        IntegerVector row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = b.first.exp[c] - b.second.exp[c];
        d.exponent_matrix.push_back(row);
        d.valuation_rhs.push_back(Integer(b.second.coeff.valuation() - b.first.coeff.valuation()));
        const T ratio = -(b.second.coeff / b.first.coeff);
        d.residue_rhs.push_back(ratio.residue());
        d.p = b.first.coeff.prime();
    }
    return detail::solve_binomial_data(d, target);
}

/// Outcome for one lower facet of the lifted Newton polytopes.
template <class T>
struct FacetCount {
    IntegerVector normal;
    std::vector<ValuedPolynomial<T>> lower_system;
    bool applicable = true;
    std::string reason;  // why not applicable, or why no root has this valuation
    Integer volume = 0;  // cell volume when every summand is an edge
    std::vector<RootClass> classes;
};

template <class T>
struct CountReport {
    std::vector<FacetCount<T>> facets;
    long total = 0;
    bool complete = true;         // no inapplicable facet
    bool valuation_collision = false;
};

/// Counts roots of F in (L^*)^n with each valuation and the given phase,
/// one lower facet at a time. A facet is used only when its lower system is
/// binomial and its cell has volume 1; other facets are reported as
/// inapplicable. Facets where some lower polynomial is a monomial carry no
/// roots. Valuations of roots are always facet normals, so when every facet
/// is applicable the total is the exact number of such roots.
template <numeric::NonArchimedean T>
CountReport<T> count_roots_by_valuation_phase(const std::vector<ValuedPolynomial<T>>& system,
                                              const PhaseVector& phase) {
    const std::size_t n = system.size();
    if (n == 0) throw InputError("empty system");
    if (phase.size() != n) throw InputError("phase vector must have n entries");
    std::vector<LiftedSupport> lifted;
    for (const auto& f : system) {
        if (f.n != n) throw DimensionError("need n polynomials in n variables");
        lifted.push_back(newton_polytope_val(f));
    }
    const unsigned long p = system.front().terms.front().coeff.prime();
    for (auto r : phase)
        if (r == 0 || r >= p) throw InputError("phase entries must be nonzero residues");
    CountReport<T> report;
    std::map<std::vector<Integer>, int> seen_valuations;
    for (const auto& facet : polyhedra::lower_facets(lifted)) {
        FacetCount<T> fc;
        fc.normal = facet.normal;
        fc.lower_system = lower_system_for_normal(system, facet.normal);
        bool monomial = false, edges = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (facet.faces[i].size() == 1) monomial = true;
            if (facet.faces[i].size() != 2) edges = false;
        }
        if (monomial) {
            fc.reason = "a lower polynomial is a monomial; no root has this valuation";
        } else if (!edges) {
            fc.applicable = false;
            fc.reason = "lower system is not binomial";
        } else {
            std::vector<std::pair<std::size_t, std::size_t>> e;
            for (const auto& face : facet.faces) e.emplace_back(face[0], face[1]);
            fc.volume = polyhedra::edge_volume(lifted, e);
            if (fc.volume != 1) {
                fc.applicable = false;
                fc.reason = "cell volume is " + fc.volume.get_str() + ", not 1";
            } else {
                BinomialSystem<T> b;
                for (const auto& g : fc.lower_system) b.push_back({g.terms[0], g.terms[1]});
                fc.classes = solve_binomial_system_phase(b, phase);
                for (const auto& c : fc.classes) {
                    report.total += c.count;
                    if (++seen_valuations[c.valuation] > 1) report.valuation_collision = true;
                }
            }
        }
        if (!fc.applicable) report.complete = false;
        report.facets.push_back(std::move(fc));
    }
    return report;
}

}  // namespace fewnomial::nonarch
