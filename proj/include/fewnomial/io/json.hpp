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

#include "fewnomial/extremal/block.hpp"
#include "fewnomial/extremal/lemma_tri.hpp"
#include "fewnomial/extremal/poonen.hpp"
#include "fewnomial/extremal/verify.hpp"
#include "fewnomial/nonarch/nonarch.hpp"
#include "fewnomial/polyhedra/triangulation.hpp"
#include "fewnomial/slp/certify.hpp"
#include "fewnomial/viro/viro.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fewnomial::io {

// std::map-backed objects: keys always come out sorted, so equal values
// serialize to identical bytes.
using Json = nlohmann::json;

using polyhedra::Integer;
using polyhedra::Rational;

/// "num/den", always with a denominator.
std::string rational_string(const Rational& q);
/// Accepts "a/b", "a" or a JSON integer.
Rational rational_from(const Json& j);
/// JSON number when it fits in a long, decimal string otherwise.
Json integer_json(const Integer& z);

Json field_json(const numeric::FieldSpec& f);
/// {"field": "R"|"Qp"|"Fpt", "p": .., "precision": ..}; validated.
numeric::FieldSpec field_from(const Json& j);

/// Coefficient literal in the form parse_element reads back.
std::string literal(const Rational& x);
std::string literal(const numeric::PAdic& x);
std::string literal(const numeric::Series& x);

/// {"n": int, "supports": [[[ints]]], "liftings": [["num/den"]], "signs": [[+-1]]}
struct SupportInput {
    std::size_t n = 0;
    std::vector<polyhedra::Support> supports;
    std::optional<std::vector<std::vector<Rational>>> liftings;
    std::optional<std::vector<viro::SignDistribution>> signs;

    /// Supports paired with their liftings; InputError when none were given.
    std::vector<polyhedra::LiftedSupport> lifted() const;
};
SupportInput support_input_from(const Json& j);

Json point_json(const polyhedra::Point& p);
Json lower_facet_json(const polyhedra::LowerFacet& f);
Json mixed_cell_json(const polyhedra::MixedCell& c, const std::vector<polyhedra::LiftedSupport>& lifted);
Json triangulation_json(const polyhedra::Triangulation& t);
Json sturmfels_json(const viro::SturmfelsCount& c, const std::vector<polyhedra::LiftedSupport>& lifted);
Json viro_json(const viro::ViroDiagram& d);

Json root_class_json(const nonarch::RootClass& r);
Json verification_json(const extremal::VerificationReport& r);
Json sweep_json(const extremal::SweepResult& r);
Json lemma_tri_json(const extremal::LemmaTriCertificate& c);
Json block_json(const extremal::BlockReport& r);
Json poonen_json(const extremal::PoonenReport& r);
Json slp_roots_json(const slp::SlpRootReport& r, const slp::HnkFamily& fam);
Json slp_real_json(const slp::RealRootCertificate& c);
Json slp_program_json(const slp::Slp& prog);

/// {"field": {...}, "n": int, "polys": [{"terms": [{"exp": [ints], "coeff": literal}]}]}
template <class T>
Json system_json(const extremal::SparseSystem<T>& s, const numeric::FieldSpec& field) {
    Json polys = Json::array();
    for (const auto& f : s.polys) {
        Json terms = Json::array();
        for (const auto& t : f.terms) terms.push_back({{"exp", point_json(t.exp)}, {"coeff", literal(t.coeff)}});
        polys.push_back({{"terms", terms}});
    }
    return {{"field", field_json(field)}, {"n", s.n}, {"polys", polys}};
}

/// Reads the polynomials of a system JSON over the domain T.
template <class T>
extremal::SparseSystem<T> system_from(const Json& j, const typename extremal::FieldTraits<T>::Context& ctx) {
    try {
        extremal::SparseSystem<T> s;
        s.n = j.at("n").get<std::size_t>();
        for (const auto& pj : j.at("polys")) {
            extremal::SparsePolynomial<T> f{s.n, {}};
            for (const auto& tj : pj.at("terms")) {
                auto exp = tj.at("exp").get<polyhedra::Point>();
                if (exp.size() != s.n) throw DimensionError("exponent vector has the wrong length");
                const auto& c = tj.at("coeff");
                f.terms.push_back({exp, extremal::parse_element<T>(c.is_string() ? c.get<std::string>() : c.dump(), ctx)});
            }
            s.polys.push_back(std::move(f));
        }
        return s;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed system JSON: ") + e.what());
    }
}

template <class T>
Json count_report_json(const nonarch::CountReport<T>& r) {
    Json facets = Json::array();
    for (const auto& f : r.facets) {
        Json classes = Json::array();
        for (const auto& c : f.classes) classes.push_back(root_class_json(c));
        Json lower = Json::array();
        for (const auto& g : f.lower_system) {
            Json terms = Json::array();
            for (const auto& t : g.terms) terms.push_back({{"exp", point_json(t.exp)}, {"coeff", literal(t.coeff)}});
            lower.push_back({{"terms", terms}});
        }
        Json normal = Json::array();
        for (const auto& v : f.normal) normal.push_back(integer_json(v));
        facets.push_back({{"normal", normal},
                          {"applicable", f.applicable},
                          {"reason", f.reason},
                          {"volume", integer_json(f.volume)},
                          {"lower_system", lower},
                          {"classes", classes}});
    }
    return {{"facets", facets},
            {"total", r.total},
            {"complete", r.complete},
            {"valuation_collision", r.valuation_collision}};
}

}  // namespace fewnomial::io
