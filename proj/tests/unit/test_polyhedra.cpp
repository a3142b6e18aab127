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

#include "fewnomial/polyhedra/linalg.hpp"
#include "fewnomial/polyhedra/lower_hull.hpp"
#include "fewnomial/polyhedra/lp.hpp"
#include "fewnomial/polyhedra/polarization.hpp"
#include "fewnomial/polyhedra/triangulation.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace fewnomial;
using namespace fewnomial::polyhedra;

namespace {

std::vector<LiftedSupport> triangle_configuration(std::size_t n) {
    std::vector<LiftedSupport> out;
    for (std::size_t i = 1; i <= n; ++i) {
        Point origin(n, 0), two(n, 0), third(n, 0);
        two[0] = 2;
        if (i < n) {
            third[i - 1] = 1;
            third[i] = 1;
        } else {
            third[n - 1] = 1;
        }
        std::vector<Rational> h = i == 1 ? std::vector<Rational>{1, 0, 0}
                                         : std::vector<Rational>{0, Rational(long(2 * i - 3)), 0};
        out.emplace_back(Support(n, {origin, two, third}), h);
    }
    return out;
}

// Indices of points in `s` minimising <v, a> + w * l(a), computed directly.
std::vector<std::size_t> argmin(const LiftedSupport& s, const IntegerVector& normal) {
    const std::size_t n = s.base.dim();
    std::vector<Rational> vals;
    for (std::size_t k = 0; k < s.size(); ++k) {
        Rational v = Rational(normal[n]) * s.lifting[k];
        for (std::size_t c = 0; c < n; ++c) v += Rational(normal[c]) * s.base[k][c];
        vals.push_back(v);
    }
    const Rational m = *std::min_element(vals.begin(), vals.end());
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < vals.size(); ++k)
        if (vals[k] == m) out.push_back(k);
    return out;
}

Support random_support(std::mt19937& rng, std::size_t n, std::size_t size, long range) {
    std::uniform_int_distribution<long> coord(0, range);
    std::vector<Point> pts;
    while (true) {
        pts.clear();
        for (std::size_t k = 0; k < size; ++k) {
            Point p(n);
            for (auto& x : p) x = coord(rng);
            pts.push_back(p);
        }
        Support s(n, pts);
        if (s.size() >= 2) return s;
    }
}

std::vector<Support> random_tuple(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> size(2, 5);
    std::vector<Support> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_support(rng, n, size(rng), 3));
    return out;
}

std::vector<std::vector<Rational>> random_liftings(std::mt19937& rng, const std::vector<Support>& s) {
    std::uniform_int_distribution<long> h(0, 100000);
    std::vector<std::vector<Rational>> out;
    for (const auto& q : s) {
        std::vector<Rational> l;
        for (std::size_t k = 0; k < q.size(); ++k) l.emplace_back(h(rng));
        out.push_back(l);
    }
    return out;
}

std::vector<LiftedSupport> lift(const std::vector<Support>& s, const std::vector<std::vector<Rational>>& l) {
    std::vector<LiftedSupport> out;
    for (std::size_t i = 0; i < s.size(); ++i) out.emplace_back(s[i], l[i]);
    return out;
}

}  // namespace

TEST_CASE("linear algebra basics") {
    RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m, 3) == 2);
    auto k = nullspace(m, 3);
    REQUIRE(k.size() == 1);
    CHECK(primitive(k[0]) == IntegerVector{-1, -1, 1});
    CHECK(determinant({{2, 1}, {1, 3}}) == 5);
    CHECK_THROWS_AS(primitive(RationalVector{0, 0}), Error);
}

TEST_CASE("exact LP feasibility") {
    LinearSystem sys;
    sys.dim = 2;
    sys.at_least({1, 0}, 0);
    sys.at_least({0, 1}, 0);
    sys.greater({-1, -1}, -1);  // x + y < 1
    auto x = find_point(sys);
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] < 1);
    sys.greater({1, 1}, 1);  // x + y > 1 contradicts
    CHECK_FALSE(feasible(sys));
}

TEST_CASE("two-dimensional example: three mixed cells") {
    Support q1(2, {{0, 0}, {2, 0}, {1, 1}});
    Support q2(2, {{0, 0}, {2, 0}, {0, 1}});
    std::vector<LiftedSupport> lifted{{q1, {1, 0, 0}}, {q2, {0, 1, 0}}};
    CHECK(is_mixed_tuple(lifted).mixed);
    auto cells = enumerate_mixed_cells(lifted);
    REQUIRE(cells.size() == 3);
    std::set<std::pair<std::set<Point>, std::set<Point>>> got;
    for (const auto& c : cells) {
        got.insert({{q1[c.edges[0].first], q1[c.edges[0].second]}, {q2[c.edges[1].first], q2[c.edges[1].second]}});
        for (std::size_t i = 0; i < 2; ++i) CHECK(c.faces[i] == argmin(lifted[i], c.normal));
    }
    const std::set<Point> e10{{0, 0}, {1, 1}}, e11{{1, 1}, {2, 0}}, e20{{0, 0}, {0, 1}}, e21{{0, 1}, {2, 0}};
    CHECK(got == decltype(got){{e10, e20}, {e11, e20}, {e11, e21}});
    Integer total = 0;
    for (const auto& c : cells) total += c.volume;
    CHECK(total == 3);
    CHECK(mixed_volume({q1, q2}).value == 3);
    CHECK(mixed_volume_polarization_oracle({q1, q2}) == 3);
}

TEST_CASE("triangle configuration: cells match the expected normals") {
    for (std::size_t n = 2; n <= 9; ++n) {
        auto lifted = triangle_configuration(n);
        auto cells = enumerate_mixed_cells(lifted);
        std::set<IntegerVector> normals, expected;
        for (const auto& c : cells) {
            normals.insert(c.normal);
            for (std::size_t i = 0; i < n; ++i) CHECK(c.faces[i] == argmin(lifted[i], c.normal));
        }
        for (std::size_t j = 0; j <= n; ++j) {
            IntegerVector v(n + 1, 0);
            v[0] = 1;
            v[n] = 1;
            for (std::size_t i = 1; i <= j; ++i) v[i - 1] -= long(j + 1 - i);
            expected.insert(v);
        }
        CHECK_MESSAGE(normals == expected, "n = " << n);
        for (const auto& c : cells) CHECK(c.volume == 1);
        if (n <= 7) CHECK(is_mixed_tuple(lifted).mixed);
    }
}

TEST_CASE("triangle configuration: inner products of the lifted vertices") {
    const std::size_t n = 6;
    auto lifted = triangle_configuration(n);
    auto pairing = [&](std::size_t i, std::size_t j) {
        IntegerVector v(n + 1, 0);
        v[0] = 1;
        v[n] = 1;
        for (std::size_t k = 1; k <= j; ++k) v[k - 1] -= long(j + 1 - k);
        std::vector<Integer> out;
        for (std::size_t k = 0; k < 3; ++k) {
            Rational s = lifted[i - 1].lifting[k] * v[n];
            for (std::size_t c = 0; c < n; ++c) s += Rational(v[c]) * lifted[i - 1].base[k][c];
            out.push_back(s.get_num());
        }
        return out;
    };
    CHECK(pairing(1, 0) == std::vector<Integer>{1, 2, 1});
    for (long j = 1; j <= 4; ++j) CHECK(pairing(1, j) == std::vector<Integer>{1, 2 - 2 * j, 2 - 2 * j});
    for (long i = 2; i <= long(n); ++i) {
        CHECK(pairing(i, 0) == std::vector<Integer>{0, 2 * i - 1, 0});
        CHECK(pairing(i, 1) == std::vector<Integer>{0, 2 * i - 3, 0});
    }
}

TEST_CASE("one-dimensional mixed volume is segment length") {
    Support s(1, {{3}, {-2}, {0}});
    CHECK(mixed_volume({s}).value == 5);
    CHECK(mixed_volume_polarization_oracle({s}) == 5);
}

TEST_CASE("small closed-form mixed volumes") {
    Support ex(2, {{0, 0}, {1, 0}}), ey(2, {{0, 0}, {0, 1}});
    auto cells = enumerate_mixed_cells({LiftedSupport::flat(ex), LiftedSupport::flat(ey)});
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].volume == 1);
    Support simplex(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(mixed_volume({simplex, simplex}).value == 1);
    CHECK(mixed_volume_polarization_oracle({simplex, simplex}) == 1);
    std::vector<Support> axes;
    for (std::size_t i = 0; i < 3; ++i) {
        Point e(3, 0);
        e[i] = 1;
        axes.emplace_back(3, std::vector<Point>{Point(3, 0), e});
    }
    CHECK(mixed_volume_polarization_oracle(axes) == 1);
    CHECK(mixed_volume(axes).value == 1);
    Support seg(1, {{0}, {1}});
    auto facets = lower_facets({LiftedSupport::flat(seg)});
    REQUIRE(facets.size() == 1);
    CHECK(facets[0].normal == IntegerVector{0, 1});
}

TEST_CASE("flat lifting of two triangles is not mixed") {
    Support t(2, {{0, 0}, {1, 0}, {0, 1}});
    auto check = is_mixed_tuple({LiftedSupport::flat(t), LiftedSupport::flat(t)});
    CHECK_FALSE(check.mixed);
    REQUIRE(check.witness.has_value());
    CHECK(check.witness->dimension_sum() != 2);
    std::vector<std::vector<Rational>> zero(2, std::vector<Rational>(3, 0));
    CHECK_THROWS_AS(mixed_volume({t, t}, zero), InputError);
    CHECK(mixed_volume({t, t}, zero, true).perturbed);
    auto mv = mixed_volume({t, t});
    CHECK(mv.perturbed);
    CHECK(mv.value == 1);
}

TEST_CASE("dimension errors") {
    Support seg(2, {{0, 0}, {1, 0}});
    CHECK_THROWS_AS(lower_facets({LiftedSupport::flat(seg), LiftedSupport::flat(seg)}), DimensionError);
    CHECK_THROWS_AS(Support(2, {{0, 0, 0}}), DimensionError);
    CHECK_THROWS_AS(Support(2, {}), InputError);
}

TEST_CASE("mixed volume agrees with the polarization oracle") {
    std::mt19937 rng(20260101);
    int done = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 2;
        auto tuple = random_tuple(rng, n);
        const Integer expected = mixed_volume_polarization_oracle(tuple);
        Integer got;
        try {
            got = mixed_volume(tuple).value;
        } catch (const DimensionError&) {
            // A degenerate Minkowski sum has mixed volume zero.
            got = 0;
        }
        CHECK_MESSAGE(got == expected, "trial " << trial);
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("mixed volume is independent of the lifting") {
    std::mt19937 rng(7);
    int checked = 0;
    while (checked < 20) {
        auto tuple = random_tuple(rng, 3);
        Integer expected;
        try {
            expected = mixed_volume(tuple).value;
        } catch (const DimensionError&) {
            continue;
        }
        auto l = random_liftings(rng, tuple);
        if (!is_mixed_tuple(lift(tuple, l)).mixed) continue;
        CHECK(mixed_volume(tuple, l, false).value == expected);
        CHECK(mixed_volume_polarization_oracle(tuple) == expected);
        ++checked;
    }
}

TEST_CASE("mixed volume is monotone under adding points") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto tuple = random_tuple(rng, 2);
        const Integer before = mixed_volume_polarization_oracle(tuple);
        auto pts = tuple[trial % 2].points();
        pts.push_back({long(rng() % 5), long(rng() % 5)});
        tuple[trial % 2] = Support(2, pts);
        CHECK(mixed_volume_polarization_oracle(tuple) >= before);
    }
}

TEST_CASE("parallel and serial mixed-cell search agree") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        auto tuple = random_tuple(rng, 3);
        auto lifted = lift(tuple, random_liftings(rng, tuple));
        std::vector<MixedCell> a, b;
        try {
            a = enumerate_mixed_cells(lifted, 4);
            b = enumerate_mixed_cells_serial(lifted);
        } catch (const DimensionError&) {
            continue;
        }
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK(a[k].normal == b[k].normal);
            CHECK(a[k].edges == b[k].edges);
        }
    }
    auto lifted = triangle_configuration(8);
    CHECK(enumerate_mixed_cells(lifted, 3).size() == enumerate_mixed_cells_serial(lifted).size());
}

TEST_CASE("brute-force volumes") {
    CHECK(normalized_volume_bruteforce({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}, 2) == 8);
    CHECK(normalized_volume_bruteforce({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3) == 1);
    CHECK(normalized_volume_bruteforce({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, 3) == 0);
    // Unit 4-cube has normalized volume 4! = 24.
    std::vector<Point> cube;
    for (int m = 0; m < 16; ++m) cube.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1});
    CHECK(normalized_volume_bruteforce(cube, 4) == 24);
    std::vector<Support> five(5, Support(5, {Point(5, 0), Point{1, 0, 0, 0, 0}}));
    CHECK_THROWS_AS(mixed_volume_polarization_oracle(five), GuardrailError);
}

TEST_CASE("pentagon: every fan triangulation is coherent") {
    Support pentagon(2, {{0, 0}, {1, 0}, {0, 1}, {1, 4}, {4, 1}});
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> h(0, 1000);
    std::set<std::vector<std::vector<std::size_t>>> seen;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Rational> l;
        for (int k = 0; k < 5; ++k) l.emplace_back(h(rng));
        try {
            auto t = coherent_triangulation(LiftedSupport(pentagon, l));
            Integer total = 0;
            for (std::size_t i = 0; i < t.simplices.size(); ++i) total += t.normalized_volume(i);
            CHECK(total == normalized_volume_bruteforce(pentagon.points(), 2));
            seen.insert(t.canonical());
        } catch (const NonSimplicialCell&) {
        }
    }
    // A convex pentagon has exactly five triangulations.
    CHECK(seen.size() == 5);
    CHECK_THROWS_AS(coherent_triangulation(LiftedSupport::flat(pentagon)), NonSimplicialCell);
}

TEST_CASE("circuit triangulations") {
    for (std::size_t n = 2; n <= 7; ++n) {
        std::vector<Point> pts{Point(n, 0)};
        Point p(n, 0);
        p[0] = 2;
        pts.push_back(p);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Point q(n, 0);
            q[i] = q[i + 1] = 1;
            pts.push_back(q);
        }
        Point last(n, 0);
        last[n - 1] = 1;
        pts.push_back(last);
        Support g(n, pts);
        const IntegerVector b = circuit_relation(g);
        // Direct check of the affine relation.
        Integer sum = 0;
        for (const auto& x : b) sum += x;
        CHECK(sum == 0);
        for (std::size_t c = 0; c < n; ++c) {
            Integer s = 0;
            for (std::size_t k = 0; k < g.size(); ++k) s += b[k] * g[k][c];
            CHECK(s == 0);
        }
        const Integer whole(long(n + 1));
        if (n <= 4) CHECK(normalized_volume_bruteforce(g.points(), n) == whole);
        // Odd positions (1-based 2, 4, ...) for even n, 3, 5, ... for odd n.
        std::vector<std::vector<std::size_t>> pattern;
        for (std::size_t i = (n % 2 == 0 ? 1 : 2); i < g.size(); i += 2) {
            std::vector<std::size_t> s;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i) s.push_back(j);
            pattern.push_back(s);
        }
        std::sort(pattern.begin(), pattern.end());
        bool pattern_found = false;
        for (int sign : {1, -1}) {
            auto t = circuit_triangulation(g, b, sign);
            Integer total = 0;
            for (std::size_t i = 0; i < t.simplices.size(); ++i) total += t.normalized_volume(i);
            CHECK(total == whole);
            if (t.canonical() == pattern) pattern_found = true;
        }
        CHECK(pattern_found);
        // Dropping point i leaves a simplex of normalized volume |b_i|; past
        // the origin that is 1 for the point 2e_1 and 2 otherwise.
        for (std::size_t i = 0; i < g.size(); ++i) {
            Triangulation one;
            one.support = g;
            std::vector<std::size_t> s;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i) s.push_back(j);
            one.simplices = {s};
            CHECK(one.normalized_volume(0) == abs(b[i]));
            if (i >= 1) CHECK(one.normalized_volume(0) == (i == 1 ? 1 : 2));
        }
    }
    Support notcircuit(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}});
    CHECK_THROWS_AS(circuit_relation(notcircuit), InputError);
}
