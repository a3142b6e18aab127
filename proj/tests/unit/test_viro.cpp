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

#include "fewnomial/viro/viro.hpp"

#include <random>
#include <set>

using namespace fewnomial;
using namespace fewnomial::viro;
using polyhedra::Point;

namespace {

// Supports, heights and coefficient signs of the G_eps family with the
// deformation parameter as the lifting.
struct SignedConfig {
    std::vector<LiftedSupport> lifted;
    std::vector<SignDistribution> signs;
};

SignedConfig g_eps_config(std::size_t n) {
    SignedConfig c;
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
        c.lifted.emplace_back(Support(n, {origin, two, third}), h);
        c.signs.push_back({-1, -1, 1});
    }
    return c;
}

}  // namespace

TEST_CASE("alternating edges") {
    Triangulation seg;
    seg.support = Support(1, {{0}, {1}});
    seg.simplices = {{0, 1}};
    CHECK(alternating_edges(seg, {1, -1}).size() == 1);
    CHECK(alternating_edges(seg, {1, 1}).empty());
    CHECK_THROWS_AS(alternating_edges(seg, {1}), InputError);
    CHECK_THROWS_AS(alternating_edges(seg, {1, 0}), InputError);
}

TEST_CASE("two-dimensional family: all three mixed cells alternate") {
    auto c = g_eps_config(2);
    auto sub = polyhedra::induced_subdivision(c.lifted);
    CHECK(count_alternating_mixed_cells(sub, c.signs) == 3);
    auto r = sturmfels_positive_count(c.lifted, c.signs);
    CHECK(r.count == 3);
    CHECK(r.mixed_cells == 3);

    // Negating every sign of one support keeps the count.
    auto neg = c.signs;
    for (auto& s : neg[0]) s = -s;
    CHECK(count_alternating_mixed_cells(sub, neg) == 3);

    // Flip the sign of x1 x2 in the first equation: edges through it stop alternating.
    auto flipped = c.signs;
    flipped[0][2] = -1;
    CHECK(count_alternating_mixed_cells(sub, flipped) < 3);

    std::vector<SignDistribution> positive{{1, 1, 1}, {1, 1, 1}};
    CHECK(count_alternating_mixed_cells(sub, positive) == 0);
}

TEST_CASE("family configuration gives n+1 alternating cells") {
    for (std::size_t n = 2; n <= 8; ++n) {
        auto c = g_eps_config(n);
        auto r = sturmfels_positive_count(c.lifted, c.signs);
        CHECK(r.count == n + 1);
        CHECK(r.count <= r.mixed_cells);
    }
}

TEST_CASE("single linear equation") {
    std::vector<LiftedSupport> l{LiftedSupport::flat(Support(1, {{1}, {0}}))};
    CHECK(sturmfels_positive_count(l, {{1, -1}}).count == 1);
    CHECK(sturmfels_positive_count(l, {{1, 1}}).count == 0);
}

TEST_CASE("non-mixed tuple is rejected") {
    Support t(2, {{0, 0}, {1, 0}, {0, 1}});
    std::vector<LiftedSupport> l{LiftedSupport::flat(t), LiftedSupport::flat(t)};
    CHECK_THROWS_AS(sturmfels_positive_count(l, {{1, -1, 1}, {1, -1, 1}}), InputError);
}

TEST_CASE("alternating count is bounded and sign-symmetric on random data") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> coord(0, 3), h(0, 1000);
    int checked = 0;
    while (checked < 20) {
        std::vector<LiftedSupport> lifted;
        std::vector<SignDistribution> signs;
        for (int i = 0; i < 2; ++i) {
            std::vector<Point> pts;
            for (int k = 0; k < 4; ++k) pts.push_back({coord(rng), coord(rng)});
            Support s(2, pts);
            std::vector<Rational> l;
            SignDistribution sg;
            for (std::size_t k = 0; k < s.size(); ++k) {
                l.emplace_back(h(rng));
                sg.push_back(rng() % 2 ? 1 : -1);
            }
            lifted.emplace_back(s, l);
            signs.push_back(sg);
        }
        SturmfelsCount a;
        try {
            a = sturmfels_positive_count(lifted, signs);
        } catch (const InputError&) {
            continue;
        }
        auto neg = signs;
        for (auto& s : neg)
            for (auto& x : s) x = -x;
        CHECK(sturmfels_positive_count(lifted, neg).count == a.count);
        CHECK(a.count <= a.mixed_cells);
        ++checked;
    }
}

TEST_CASE("Viro diagram of a signed triangle") {
    LiftedSupport tri(Support(2, {{0, 0}, {1, 0}, {0, 1}}), {0, 0, 0});
    auto d = viro_diagram_2d(tri, {1, -1, -1});
    REQUIRE(d.segments.size() == 1);
    std::set<RationalPoint> ends{d.segments[0].from, d.segments[0].to};
    CHECK(ends == std::set<RationalPoint>{{Rational(1, 2), 0}, {0, Rational(1, 2)}});
    CHECK(d.segments[0].from_on_boundary);
    CHECK(d.segments[0].to_on_boundary);
    CHECK(viro_diagram_2d(tri, {1, 1, 1}).segments.empty());
    LiftedSupport cube(Support(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), {0, 0, 0, 0});
    CHECK_THROWS_AS(viro_diagram_2d(cube, {1, 1, 1, 1}), DimensionError);
}

TEST_CASE("Viro diagrams of the signed pentagon") {
    // 1 - x1 - x2 + (6/5)(x1^4 x2 + x1 x2^4)
    Support pentagon(2, {{0, 0}, {1, 0}, {0, 1}, {4, 1}, {1, 4}});
    const SignDistribution signs{1, -1, -1, 1, 1};
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> h(0, 1000);
    std::set<std::vector<std::vector<std::size_t>>> seen;
    for (int trial = 0; trial < 300 && seen.size() < 5; ++trial) {
        std::vector<Rational> l;
        for (int k = 0; k < 5; ++k) l.emplace_back(h(rng));
        ViroDiagram d;
        try {
            d = viro_diagram_2d(LiftedSupport(pentagon, l), signs);
        } catch (const polyhedra::NonSimplicialCell&) {
            continue;
        }
        seen.insert(d.triangulation.canonical());
        CHECK_FALSE(d.segments.empty());
        for (const auto& seg : d.segments) {
            // Segments only live in triangles that carry both signs.
            const auto& s = d.triangulation.simplices[seg.cell];
            CHECK(std::set<int>{signs[s[0]], signs[s[1]], signs[s[2]]}.size() == 2);
        }
        CHECK(viro_diagram_2d(LiftedSupport(pentagon, l), {1, 1, 1, 1, 1}).segments.empty());
    }
    CHECK(seen.size() == 5);
}
