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

#include "doctest.h"

#include "fewnomial/nonarch/nonarch.hpp"

#include <set>

using namespace fewnomial;
using namespace fewnomial::nonarch;
using numeric::PAdic;
using numeric::Series;

namespace {

template <class T>
T lit(long value, const typename T::Context& ctx) {
    return T::from_integer(Integer(value), ctx);
}

// x1 x2 - (eps + x1^2), x_i x_{i+1} - (1 + eps^(2i-3) x1^2), x_n - (1 + eps^(2n-3) x1^2)
template <class T>
std::vector<ValuedPolynomial<T>> g_system(std::size_t n, const typename T::Context& ctx) {
    std::vector<ValuedPolynomial<T>> sys;
    for (std::size_t i = 1; i <= n; ++i) {
        Point lead(n, 0), origin(n, 0), sq(n, 0);
        sq[0] = 2;
        if (i < n) {
            lead[i - 1] = 1;
            lead[i] = 1;
        } else {
            lead[n - 1] = 1;
        }
        ValuedPolynomial<T> f{n, {}};
        f.terms.push_back({lead, lit<T>(1, ctx)});
        if (i == 1) {
            f.terms.push_back({origin, -T::uniformizer_power(1, ctx)});
            f.terms.push_back({sq, lit<T>(-1, ctx)});
        } else {
            f.terms.push_back({origin, lit<T>(-1, ctx)});
            f.terms.push_back({sq, -T::uniformizer_power(long(2 * i - 3), ctx)});
        }
        sys.push_back(std::move(f));
    }
    return sys;
}

// Exact value of a lower polynomial at (p^v_1, ..., p^v_n).
Rational eval_at_powers(const ValuedPolynomial<PAdic>& f, const std::vector<Integer>& v, unsigned long p) {
    Rational acc = 0;
    for (const auto& t : f.terms) {
        Rational term = t.coeff.balanced_representative();
        for (std::size_t c = 0; c < f.n; ++c) {
            const long e = Integer(t.exp[c] * v[c]).get_si();
            Rational pe = numeric::ipow(Integer(p), static_cast<unsigned long>(std::labs(e)));
            term *= e >= 0 ? pe : Rational(1) / pe;
        }
        acc += term;
    }
    return acc;
}

}  // namespace

TEST_CASE("Newton polytope of a valued polynomial") {
    PAdic::Context ctx{5, 32};
    ValuedPolynomial<PAdic> f{2, {{{1, 1}, lit<PAdic>(1, ctx)}, {{0, 0}, lit<PAdic>(-5, ctx)}}};
    auto l = newton_polytope_val(f);
    CHECK(l.base[0] == Point{1, 1});
    CHECK(l.lifting == std::vector<Rational>{0, 1});
    auto g = g_system<PAdic>(2, ctx);
    CHECK(newton_polytope_val(g[0]).lifting == std::vector<Rational>{0, 1, 0});
    CHECK_THROWS_AS(newton_polytope_val(ValuedPolynomial<PAdic>{2, {}}), InputError);
    ValuedPolynomial<PAdic> dup{1, {{{1}, lit<PAdic>(1, ctx)}, {{1}, lit<PAdic>(2, ctx)}}};
    CHECK_THROWS_AS(newton_polytope_val(dup), InputError);
}

TEST_CASE("two-dimensional family: valuations reproduce the mixed cells") {
    PAdic::Context ctx{3, 32};
    auto g = g_system<PAdic>(2, ctx);
    std::vector<LiftedSupport> lifted{newton_polytope_val(g[0]), newton_polytope_val(g[1])};
    CHECK(lifted[1].lifting == std::vector<Rational>{0, 0, 1});
    CHECK(polyhedra::enumerate_mixed_cells(lifted).size() == 3);
}

TEST_CASE("three-dimensional family: lower systems and root classes") {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        PAdic::Context ctx{p, 32};
        auto g = g_system<PAdic>(3, ctx);
        auto report = count_roots_by_valuation_phase(g, PhaseVector{1, 1, 1});
        CHECK(report.complete);
        CHECK_FALSE(report.valuation_collision);
        CHECK(report.total == 4);
        std::set<std::vector<Integer>> vals;
        for (const auto& f : report.facets)
            for (const auto& c : f.classes) {
                vals.insert(c.valuation);
                CHECK(c.phase == PhaseVector{1, 1, 1});
                CHECK(c.count == 1);
                // (p^v1, p^v2, p^v3) solves the lower binomial system exactly.
                for (const auto& lower : f.lower_system) CHECK(eval_at_powers(lower, c.valuation, p) == 0);
            }
        CHECK(vals == std::set<std::vector<Integer>>{{1, 0, 0}, {0, 0, 0}, {-1, -1, 0}, {-2, -2, -1}});

        // The lower system at the normal of (1,0,0) is (x1 x2 - p, x2 x3 - 1, x3 - 1).
        auto lower = lower_system_for_normal(g, IntegerVector{1, 0, 0, 1});
        REQUIRE(lower.size() == 3);
        CHECK(lower[0].terms.size() == 2);
        CHECK(lower[0].terms[1].coeff.valuation() == 1);
        CHECK(lower[1].terms.size() == 2);
        CHECK(lower[2].terms[0].exp == Point{0, 0, 1});
        CHECK(lower[2].terms[1].exp == Point{0, 0, 0});
        // At (-2,-2,-1): (x1 x2 - x1^2, x2 x3 - p x1^2, x3 - p^3 x1^2).
        auto last = lower_system_for_normal(g, IntegerVector{-2, -2, -1, 1});
        CHECK(last[0].terms[1].exp == Point{2, 0, 0});
        CHECK(last[1].terms[1].coeff.valuation() == 1);
        CHECK(last[2].terms[1].coeff.valuation() == 3);
    }
    CHECK_THROWS_AS(lower_system_for_normal(g_system<PAdic>(3, {3, 8}), IntegerVector{0, 0, 0, 0}), InputError);
}

TEST_CASE("family totals are n+1 over both field types") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            CHECK(count_roots_by_valuation_phase(g_system<PAdic>(n, {p, 32}), PhaseVector(n, 1)).total == long(n + 1));
            CHECK(count_roots_by_valuation_phase(g_system<Series>(n, {p, 32}), PhaseVector(n, 1)).total ==
                  long(n + 1));
        }
    }
}

TEST_CASE("binomial systems") {
    PAdic::Context ctx{5, 32};
    // x1 - 1
    BinomialSystem<PAdic> lin{{{{1}, lit<PAdic>(1, ctx)}, {{0}, lit<PAdic>(-1, ctx)}}};
    auto r = solve_binomial_system_phase(lin, PhaseVector{1});
    REQUIRE(r.size() == 1);
    CHECK(r[0].valuation == std::vector<Integer>{0});
    CHECK(r[0].count == 1);
    // x1^2 - 1 over Q_5: residues 1 and 4, one with phase 1.
    BinomialSystem<PAdic> sq{{{{2}, lit<PAdic>(1, ctx)}, {{0}, lit<PAdic>(-1, ctx)}}};
    CHECK(solve_binomial_system_phase(sq, PhaseVector{1}).size() == 1);
    auto all = solve_binomial_system_phase(sq);
    REQUIRE(all.size() == 2);
    CHECK(all[0].phase == PhaseVector{1});
    CHECK(all[1].phase == PhaseVector{4});
    // x1^2 - 5 has no root in Q_5: the valuation would be 1/2.
    BinomialSystem<PAdic> ram{{{{2}, lit<PAdic>(1, ctx)}, {{0}, lit<PAdic>(-5, ctx)}}};
    CHECK(solve_binomial_system_phase(ram).empty());
    // Singular exponent matrix.
    BinomialSystem<PAdic> sing{{{{1, 1}, lit<PAdic>(1, ctx)}, {{0, 0}, lit<PAdic>(-1, ctx)}},
                               {{{2, 2}, lit<PAdic>(1, ctx)}, {{0, 0}, lit<PAdic>(-1, ctx)}}};
    CHECK_THROWS_AS(solve_binomial_system_phase(sing), InputError);
    // p dividing the determinant is refused.
    BinomialSystem<PAdic> five{{{{5}, lit<PAdic>(1, ctx)}, {{0}, lit<PAdic>(-1, ctx)}}};
    CHECK_THROWS_AS(solve_binomial_system_phase(five), InputError);
    // Phase mismatch: x1 - 2 has phase 2, not 1.
    BinomialSystem<PAdic> two{{{{1}, lit<PAdic>(1, ctx)}, {{0}, lit<PAdic>(-2, ctx)}}};
    CHECK(solve_binomial_system_phase(two, PhaseVector{1}).empty());
    CHECK(solve_binomial_system_phase(two, PhaseVector{2}).size() == 1);
}

TEST_CASE("monomial scaling leaves the root classes unchanged") {
    PAdic::Context ctx{3, 32};
    auto g = g_system<PAdic>(3, ctx);
    auto base = count_roots_by_valuation_phase(g, PhaseVector{1, 1, 1});
    for (auto& t : g[1].terms) {
        t.exp[0] += 3;
        t.exp[2] -= 1;
    }
    auto shifted = count_roots_by_valuation_phase(g, PhaseVector{1, 1, 1});
    std::set<std::vector<Integer>> a, b;
    for (const auto& f : base.facets)
        for (const auto& c : f.classes) a.insert(c.valuation);
    for (const auto& f : shifted.facets)
        for (const auto& c : f.classes) b.insert(c.valuation);
    CHECK(a == b);
    CHECK(shifted.total == base.total);
}

TEST_CASE("single linear equation") {
    ValuedPolynomial<PAdic> f{1, {{{1}, lit<PAdic>(1, {7, 16})}, {{0}, lit<PAdic>(-1, {7, 16})}}};
    CHECK(count_roots_by_valuation_phase<PAdic>({f}, PhaseVector{1}).total == 1);
}
