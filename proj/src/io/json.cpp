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

#include "fewnomial/io/json.hpp"

namespace fewnomial::io {

std::string rational_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string()) return numeric::parse_rational(j.get<std::string>());
    throw InputError("expected a rational as \"num/den\" or an integer, got " + j.dump());
}

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json field_json(const numeric::FieldSpec& f) {
    if (f.kind == numeric::FieldKind::Real) return {{"field", "R"}};
    return {{"field", f.name()}, {"p", f.p}, {"precision", f.precision}};
}

numeric::FieldSpec field_from(const Json& j) {
    try {
        numeric::FieldSpec f;
        f.kind = numeric::parse_field_kind(j.at("field").get<std::string>());
        if (f.kind != numeric::FieldKind::Real) {
            f.p = j.at("p").get<unsigned long>();
            f.precision = j.value("precision", 64L);
        } else {
            f.precision = 0;
        }
        f.validate();
        return f;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed field specification: ") + e.what());
    }
}

std::string literal(const Rational& x) { return rational_string(x); }

std::string literal(const numeric::PAdic& x) {
    if (x.is_zero()) return "0";
    // Balanced unit, so small negative coefficients read back as themselves.
    Rational u = x.balanced_representative();
    const Rational scale = x.valuation() >= 0
                               ? Rational(numeric::ipow(x.prime(), static_cast<unsigned long>(x.valuation())))
                               : Rational(1, numeric::ipow(x.prime(), static_cast<unsigned long>(-x.valuation())));
    u /= scale;
    u.canonicalize();
    return "p^" + std::to_string(x.valuation()) + "*" + u.get_num().get_str();
}

std::string literal(const numeric::Series& x) { return x.is_zero() ? "0" : x.to_string(); }

std::vector<polyhedra::LiftedSupport> SupportInput::lifted() const {
    if (!liftings) throw InputError("this command needs \"liftings\"");
    std::vector<polyhedra::LiftedSupport> out;
    for (std::size_t i = 0; i < supports.size(); ++i) out.emplace_back(supports[i], (*liftings)[i]);
    return out;
}

SupportInput support_input_from(const Json& j) {
    SupportInput in;
    try {
        in.n = j.at("n").get<std::size_t>();
        for (const auto& sj : j.at("supports")) {
            auto pts = sj.get<std::vector<polyhedra::Point>>();
            for (const auto& p : pts)
                if (p.size() != in.n) throw DimensionError("point of the wrong dimension in a support");
            if (pts.empty()) throw InputError("empty support");
            const std::size_t before = pts.size();
            in.supports.emplace_back(in.n, std::move(pts));
            if (in.supports.back().size() != before) throw InputError("repeated point in a support");
        }
        if (j.contains("liftings")) {
            std::vector<std::vector<Rational>> ls;
            for (const auto& lj : j.at("liftings")) {
                std::vector<Rational> l;
                for (const auto& h : lj) l.push_back(rational_from(h));
                ls.push_back(std::move(l));
            }
            if (ls.size() != in.supports.size()) throw InputError("need one lifting per support");
            for (std::size_t i = 0; i < ls.size(); ++i)
                if (ls[i].size() != in.supports[i].size()) throw InputError("need one height per point");
            in.liftings = std::move(ls);
        }
        if (j.contains("signs")) {
            auto ss = j.at("signs").get<std::vector<viro::SignDistribution>>();
            if (ss.size() != in.supports.size()) throw InputError("need one sign vector per support");
            for (std::size_t i = 0; i < ss.size(); ++i) {
                if (ss[i].size() != in.supports[i].size()) throw InputError("need one sign per point");
                for (int s : ss[i])
                    if (s != 1 && s != -1) throw InputError("signs must be +1 or -1");
            }
            in.signs = std::move(ss);
        }
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed support JSON: ") + e.what());
    }
    return in;
}

Json point_json(const polyhedra::Point& p) { return Json(p); }

namespace {

Json integer_vector_json(const polyhedra::IntegerVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(integer_json(x));
    return out;
}

Json index_sets_json(const std::vector<std::vector<std::size_t>>& sets) { return Json(sets); }

Json rational_point_json(const viro::RationalPoint& p) {
    return Json::array({rational_string(p.first), rational_string(p.second)});
}

Json verification_root_json(const extremal::RootReport& r) {
    Json j;
    if (r.u_interval) j["u_interval"] = {rational_string(r.u_interval->lo()), rational_string(r.u_interval->hi())};
    if (!r.coordinate_intervals.empty()) {
        Json cs = Json::array();
        for (const auto& iv : r.coordinate_intervals) cs.push_back({rational_string(iv.lo()), rational_string(iv.hi())});
        j["coordinate_intervals"] = cs;
    }
    if (!r.u_literal.empty()) j["u"] = r.u_literal;
    if (!r.coordinates.empty()) j["coordinates"] = r.coordinates;
    j["valuations"] = r.valuations;
    j["phases"] = r.phases;
    j["all_phase_one"] = r.all_phase_one;
    return j;
}

}  // namespace

Json lower_facet_json(const polyhedra::LowerFacet& f) {
    return {{"normal", integer_vector_json(f.normal)},
            {"faces", index_sets_json(f.faces)},
            {"face_dims", f.face_dims},
            {"is_mixed", f.is_mixed}};
}

Json mixed_cell_json(const polyhedra::MixedCell& c, const std::vector<polyhedra::LiftedSupport>& lifted) {
    Json edges = Json::array(), points = Json::array();
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        edges.push_back({c.edges[i].first, c.edges[i].second});
        points.push_back({point_json(lifted[i].base[c.edges[i].first]), point_json(lifted[i].base[c.edges[i].second])});
    }
    return {{"normal", integer_vector_json(c.normal)},
            {"edges", edges},
            {"edge_points", points},
            {"faces", index_sets_json(c.faces)},
            {"volume", integer_json(c.volume)}};
}

Json triangulation_json(const polyhedra::Triangulation& t) {
    Json simplices = Json::array();
    const auto canon = t.canonical();
    polyhedra::Triangulation sorted = t;
    sorted.simplices = canon;
    for (std::size_t i = 0; i < canon.size(); ++i)
        simplices.push_back({{"points", canon[i]}, {"normalized_volume", integer_json(sorted.normalized_volume(i))}});
    Json out = {{"n", t.support.dim()}, {"support", t.support.points()}, {"simplices", simplices}};
    if (t.lifting) {
        Json l = Json::array();
        for (const auto& h : *t.lifting) l.push_back(rational_string(h));
        out["lifting"] = l;
    }
    return out;
}

Json sturmfels_json(const viro::SturmfelsCount& c, const std::vector<polyhedra::LiftedSupport>& lifted) {
    Json cells = Json::array();
    for (const auto& m : c.alternating) cells.push_back(mixed_cell_json(m, lifted));
    return {{"positive_roots", c.count}, {"mixed_cells", c.mixed_cells}, {"alternating_cells", cells}};
}

Json viro_json(const viro::ViroDiagram& d) {
    Json segs = Json::array();
    for (const auto& s : d.segments)
        segs.push_back({{"from", rational_point_json(s.from)},
                        {"to", rational_point_json(s.to)},
                        {"from_on_boundary", s.from_on_boundary},
                        {"to_on_boundary", s.to_on_boundary},
                        {"cell", s.cell}});
    return {{"triangulation", triangulation_json(d.triangulation)}, {"signs", d.signs}, {"segments", segs}};
}

Json root_class_json(const nonarch::RootClass& r) {
    Json v = Json::array();
    for (const auto& x : r.valuation) v.push_back(integer_json(x));
    return {{"valuation", v}, {"phase", r.phase}, {"count", r.count}};
}

Json verification_json(const extremal::VerificationReport& r) {
    Json roots = Json::array();
    for (const auto& x : r.roots) roots.push_back(verification_root_json(x));
    Json j = {{"n", r.n},
              {"field", r.field},
              {"epsilon", r.epsilon},
              {"target", r.target},
              {"certified", r.certified},
              {"found", r.found},
              {"status", extremal::to_string(r.status)},
              {"methods", r.methods},
              {"roots", roots},
              {"note", r.note}};
    if (r.precision > 0) j["precision"] = r.precision;
    return j;
}

Json sweep_json(const extremal::SweepResult& r) {
    Json counts = Json::array();
    for (const auto& [k, c] : r.counts) counts.push_back({{"k", k}, {"certified", c}});
    Json j = {{"counts", counts}};
    j["smallest_k"] = r.smallest ? Json(*r.smallest) : Json(nullptr);
    return j;
}

Json lemma_tri_json(const extremal::LemmaTriCertificate& c) {
    Json facets = Json::array();
    for (const auto& f : c.mixed_facets) facets.push_back(lower_facet_json(f));
    Json vols = Json::array();
    for (const auto& v : c.volumes) vols.push_back(integer_json(v));
    Json pairings = Json::array();
    for (const auto& row : c.pairings) {
        Json r = Json::array();
        for (const auto& t : row) r.push_back({integer_json(t[0]), integer_json(t[1]), integer_json(t[2])});
        pairings.push_back(r);
    }
    Json checks = Json::array();
    for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
    return {{"n", c.n},
            {"lower_facet_count", c.lower_facet_count},
            {"mixed_facets", facets},
            {"volumes", vols},
            {"mixed_volume", integer_json(c.mixed_volume)},
            {"pairings", pairings},
            {"checks", checks},
            {"certified", c.certified()}};
}

Json block_json(const extremal::BlockReport& r) {
    return {{"n", r.shape.n},
            {"k", r.shape.k},
            {"ell", r.shape.ell},
            {"m", r.shape.m},
            {"support_size", r.support_size},
            {"expected", r.expected},
            {"base_count", r.base_count},
            {"certified", r.certified},
            {"status", extremal::to_string(r.status)},
            {"base", verification_json(r.base)}};
}

Json poonen_json(const extremal::PoonenReport& r) {
    return {{"p", r.p},
            {"k", r.k},
            {"variant", extremal::to_string(r.variant)},
            {"degree", r.degree},
            {"term_count", r.term_count},
            {"search_digits", r.search_digits},
            {"brute_force_phase1", r.brute_force_phase1},
            {"library_phase1", r.library_phase1},
            {"target", r.target},
            {"matches_target", r.brute_force_phase1 == r.target}};
}

Json slp_program_json(const slp::Slp& prog) {
    return {{"length", prog.length()}, {"degree_bound", prog.degree_bound()}, {"text", prog.to_text()}};
}

Json slp_roots_json(const slp::SlpRootReport& r, const slp::HnkFamily& fam) {
    Json roots = Json::array();
    for (const auto& x : r.roots) {
        Json j = {{"approx", literal(x.approx)}, {"level", x.level}, {"derivative_valuation", x.derivative_valuation}};
        j["radius"] = x.radius == slp::CertifiedRoot::kExact ? Json("exact") : Json(x.radius);
        roots.push_back(j);
    }
    Json levels = Json::array();
    for (const auto& l : r.levels)
        levels.push_back({{"m", l.m},
                          {"roots", l.roots},
                          {"distinct_modulus_exponent", l.distinct_modulus},
                          {"distinct", l.distinct},
                          {"expected_derivative_valuation", l.expected_derivative_valuation},
                          {"derivative_valuations", l.derivative_valuations}});
    return {{"n", r.n},
            {"k", r.k},
            {"p", r.p},
            {"c", integer_json(fam.c)},
            {"precision", r.precision},
            {"tau_upper_bound", fam.program.pruned().length()},
            {"roots", roots},
            {"levels", levels},
            {"hensel", r.hensel},
            {"nested", r.nested},
            {"quotient_nonzero_at_0_and_1", r.quotient_nonzero_at_0_and_1},
            {"quotient_degree_bound", r.quotient_degree_bound},
            {"quotient_roots", r.quotient_roots},
            {"expected", r.expected},
            {"failure", r.failure},
            {"certified", r.certified()}};
}

Json slp_real_json(const slp::RealRootCertificate& c) {
    Json maxima = Json::array();
    for (const auto& m : c.maxima) maxima.push_back(rational_string(m));
    Json pieces = Json::array();
    for (const auto& [dom, range] : c.pieces) pieces.push_back({{"domain", dom.to_string()}, {"range", range.to_string()}});
    Json j = {{"n", c.n},
              {"k", c.k},
              {"maxima", maxima},
              {"chain", c.chain},
              {"pieces", pieces},
              {"interval", c.interval},
              {"simple_roots_0_and_1", c.simple_roots_0_and_1},
              {"method", c.method},
              {"certified", c.certified()}};
    if (c.h2_maximum) {
        j["h2_maximum"] = rational_string(*c.h2_maximum);
        j["h2_within_three_eighths"] = c.h2_within_three_eighths;
    }
    j["sturm_real_roots"] = c.sturm_real_roots ? Json(*c.sturm_real_roots) : Json(nullptr);
    return j;
}

}  // namespace fewnomial::io
