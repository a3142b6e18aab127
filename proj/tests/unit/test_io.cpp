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

#include "fewnomial/io/json.hpp"
#include "fewnomial/io/svg.hpp"
#include "fewnomial/polyhedra/lower_hull.hpp"

using namespace fewnomial;
using io::Json;
using numeric::Integer;
using numeric::Rational;
using numeric::PAdic;
using numeric::Series;

TEST_CASE("rationals serialize as num/den") {
    CHECK(io::rational_string(Rational(3)) == "3/1");
    CHECK(io::rational_string(Rational(-6, 4)) == "-3/2");
    CHECK(io::rational_from(Json("-3/2")) == Rational(-3, 2));
    CHECK(io::rational_from(Json(7)) == 7);
    CHECK(io::rational_from(Json("5")) == 5);
    CHECK_THROWS_AS(io::rational_from(Json(1.5)), InputError);
    CHECK(io::integer_json(Integer("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
    CHECK(io::integer_json(Integer(-4)) == Json(-4));
}

TEST_CASE("coefficient literals read back") {
    const numeric::PAdicContext pc{3, 30};
    for (long v : {-7L, -1L, 1L, 5L, 18L, -54L}) {
        const auto x = PAdic::from_integer(v, pc);
        const auto lit = io::literal(x);
        CHECK(extremal::parse_element<PAdic>(lit, pc) == x);
    }
    CHECK(io::literal(PAdic::from_integer(-1, pc)) == "p^0*-1");
    CHECK(io::literal(PAdic::from_rational(Rational(2, 9), pc)) == "p^-2*2");
    const numeric::SeriesContext sc{5, 12};
    const auto s = Series::parse("t^-1*(2+3*t)", sc);
    CHECK(extremal::parse_element<Series>(io::literal(s), sc) == s);
}

TEST_CASE("field specifications") {
    auto f = io::field_from(Json{{"field", "Qp"}, {"p", 7}, {"precision", 20}});
    CHECK(f.kind == numeric::FieldKind::PAdic);
    CHECK(f.p == 7);
    CHECK(io::field_json(f) == Json{{"field", "Qp"}, {"p", 7}, {"precision", 20}});
    CHECK(io::field_json(numeric::FieldSpec::real()) == Json{{"field", "R"}});
    CHECK_THROWS_AS(io::field_from(Json{{"field", "Qp"}, {"p", 6}}), InputError);
    CHECK_THROWS_AS(io::field_from(Json{{"field", "C"}}), InputError);
}

TEST_CASE("support input") {
    auto in = io::support_input_from(Json::parse(R"({"n": 2, "supports": [[[0,0],[1,0],[0,1]]],
        "liftings": [["0", "1/2", 3]], "signs": [[1,-1,1]]})"));
    CHECK(in.supports.size() == 1);
    CHECK((*in.liftings)[0][1] == Rational(1, 2));
    CHECK(in.lifted()[0].lifting[2] == 3);
    CHECK_THROWS_AS(io::support_input_from(Json::parse(R"({"n": 2, "supports": [[[0,0,0]]]})")), DimensionError);
    CHECK_THROWS_AS(io::support_input_from(Json::parse(R"({"n": 2, "supports": [[[0,0],[0,0]]]})")), InputError);
    CHECK_THROWS_AS(io::support_input_from(Json::parse(R"({"n": 2, "supports": [[[0,0]]], "liftings": [[]]})")),
                    InputError);
    CHECK_THROWS_AS(io::support_input_from(Json::parse(R"({"n": 2, "supports": [[[0,0]]], "signs": [[2]]})")),
                    InputError);
    CHECK_THROWS_AS(io::support_input_from(Json::parse(R"({"supports": []})")), InputError);
    CHECK_THROWS_AS(io::support_input_from(Json::parse(R"({"n": 2})")).lifted(), InputError);
}

TEST_CASE("system round trip") {
    const numeric::PAdicContext ctx{5, 40};
    const auto g = extremal::gen_G_eps<PAdic>(3, PAdic::uniformizer_power(1, ctx), ctx);
    const auto j = io::system_json(g, numeric::FieldSpec::padic(5, 40));
    const auto back = io::system_from<PAdic>(j, ctx);
    REQUIRE(back.polys.size() == g.polys.size());
    for (std::size_t i = 0; i < g.polys.size(); ++i)
        for (std::size_t t = 0; t < g.polys[i].terms.size(); ++t) {
            CHECK(back.polys[i].terms[t].exp == g.polys[i].terms[t].exp);
            CHECK(back.polys[i].terms[t].coeff == g.polys[i].terms[t].coeff);
        }
    CHECK(j.dump() == io::system_json(back, numeric::FieldSpec::padic(5, 40)).dump());
    CHECK_THROWS_AS(io::system_from<PAdic>(Json::parse(R"({"n": 1, "polys": [{"terms": [{"exp": [1, 2], "coeff": "1"}]}]})"), ctx),
                    DimensionError);
}

TEST_CASE("pictures") {
    polyhedra::Support q1(2, {{0, 0}, {2, 0}, {1, 1}});
    polyhedra::Support q2(2, {{0, 0}, {2, 0}, {0, 1}});
    std::vector<polyhedra::LiftedSupport> lifted{{q1, {1, 0, 0}}, {q2, {0, 1, 0}}};
    const auto sub = polyhedra::induced_subdivision(lifted);
    const auto svg = io::subdivision_svg(sub);
    CHECK(svg == io::subdivision_svg(sub));
    std::size_t mixed = 0;
    for (auto pos = svg.find("class=\"mixed\""); pos != std::string::npos; pos = svg.find("class=\"mixed\"", pos + 1))
        ++mixed;
    CHECK(mixed == 3);
    // 4 x 2 lattice box plus margins at 40 px per unit.
    CHECK(svg.find("width=\"240\" height=\"160\"") != std::string::npos);

    polyhedra::Support cube(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto tri = polyhedra::coherent_triangulation({cube, {0, 0, 0, 0}});
    CHECK_THROWS_AS(io::triangulation_svg(tri), DimensionError);

    polyhedra::Support pent(2, {{0, 0}, {1, 0}, {0, 1}, {1, 4}, {4, 1}});
    const auto d = viro::viro_diagram_2d({pent, {0, 1, 1, 3, 3}}, {1, 1, 1, 1, 1});
    const auto hull_only = io::viro_svg(d);
    CHECK(hull_only.find("class=\"segment\"") == std::string::npos);
    CHECK(hull_only.find("class=\"hull\"") != std::string::npos);
}
