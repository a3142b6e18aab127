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

// Command-line front end: JSON in, JSON (and optionally SVG) out.
//
// Exit codes: 0 success or certified, 1 refuted, 2 undecided, 3 input
// error, 4 guardrail (size or precision ceiling).

#include "fewnomial/io/json.hpp"
#include "fewnomial/io/svg.hpp"
#include "fewnomial/polyhedra/lower_hull.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fewnomial;
using io::Json;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kUndecided = 2, kInput = 3, kGuardrail = 4 };

struct Options {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string field = "R";
    unsigned long p = 0;
    std::string eps;
    long precision = 64;
    int jobs = 0;
    std::string out;
    std::string svg;
    std::string in;
    std::string json;
    std::string variant = "both";
    long sweep = 0;
    int circuit_sign = 0;
    bool allow_perturb = false;
    std::vector<std::size_t> phase;
};

Json read_input(const Options& o) {
    std::string text;
    if (!o.json.empty()) {
        text = o.json;
    } else if (o.in.empty() || o.in == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(o.in);
        if (!f) throw InputError("cannot open " + o.in);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

void emit(const Options& o, const std::string& command, Json body) {
    body["command"] = command;
    write_text(o.out, body.dump(2) + "\n");
}

long precision_ceiling() {
    if (const char* env = std::getenv("FEWNOMIAL_PRECISION_CEILING")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0)
            throw InputError("FEWNOMIAL_PRECISION_CEILING must be a positive integer");
        return v;
    }
    return 4096;
}

numeric::PrecisionPolicy policy(const Options& o) {
    numeric::PrecisionPolicy pol;
    pol.initial = o.precision;
    pol.ceiling = precision_ceiling();
    if (pol.initial > pol.ceiling) throw GuardrailError("--precision exceeds the precision ceiling");
    return pol;
}

numeric::FieldSpec field_spec(const Options& o) {
    const auto kind = numeric::parse_field_kind(o.field);
    numeric::FieldSpec f;
    if (kind == numeric::FieldKind::Real) {
        f = numeric::FieldSpec::real();
    } else {
        if (o.p == 0) throw InputError("--p is required for --field " + o.field);
        f = kind == numeric::FieldKind::PAdic ? numeric::FieldSpec::padic(o.p, o.precision)
                                              : numeric::FieldSpec::series(o.p, o.precision);
    }
    f.validate();
    return f;
}

std::string default_eps(const Options& o, const numeric::FieldSpec& f) {
    if (!o.eps.empty()) return o.eps;
    switch (f.kind) {
        case numeric::FieldKind::Real: return "1/4";
        case numeric::FieldKind::PAdic: return "p";
        case numeric::FieldKind::Series: return "t";
    }
    return "1/4";
}

int status_exit(extremal::Status s) {
    switch (s) {
        case extremal::Status::Certified: return kOk;
        case extremal::Status::Refuted: return kRefuted;
        case extremal::Status::Undecided: return kUndecided;
    }
    return kUndecided;
}

void require_n(const Options& o, std::size_t min) {
    if (o.n < min) throw InputError("--n must be at least " + std::to_string(min));
}

// --- polyhedral commands ---------------------------------------------------

int cmd_mixed_volume(const Options& o) {
    const auto in = io::support_input_from(read_input(o));
    const auto mv = polyhedra::mixed_volume(in.supports, in.liftings, o.allow_perturb, o.jobs);
    Json cells = Json::array();
    for (const auto& c : polyhedra::enumerate_mixed_cells(mv.lifting_used, o.jobs))
        cells.push_back(io::mixed_cell_json(c, mv.lifting_used));
    emit(o, "mixed-volume",
         {{"n", in.n}, {"mixed_volume", io::integer_json(mv.value)}, {"perturbed", mv.perturbed}, {"cells", cells}});
    return kOk;
}

int cmd_mixed_cells(const Options& o) {
    const auto in = io::support_input_from(read_input(o));
    const auto lifted = in.lifted();
    const auto check = polyhedra::is_mixed_tuple(lifted);
    if (!check.mixed) {
        std::string normal;
        for (const auto& v : check.witness->normal) normal += (normal.empty() ? "" : ",") + v.get_str();
        throw InputError("lifting is not mixed; offending lower facet has normal (" + normal + ")");
    }
    const auto cells = polyhedra::enumerate_mixed_cells(lifted, o.jobs);
    const auto sub = polyhedra::induced_subdivision(lifted);
    Json cj = Json::array(), fj = Json::array();
    polyhedra::Integer total = 0;
    for (const auto& c : cells) {
        cj.push_back(io::mixed_cell_json(c, lifted));
        total += c.volume;
    }
    for (const auto& f : sub.cells) fj.push_back(io::lower_facet_json(f));
    if (!o.svg.empty()) write_text(o.svg, io::subdivision_svg(sub));
    emit(o, "mixed-cells", {{"n", in.n}, {"cells", cj}, {"facets", fj}, {"mixed_volume", io::integer_json(total)}});
    return kOk;
}

int cmd_triangulate(const Options& o) {
    const auto in = io::support_input_from(read_input(o));
    if (in.supports.size() != 1) throw InputError("triangulate takes exactly one support");
    polyhedra::Triangulation tri;
    if (o.circuit_sign != 0) {
        const auto b = polyhedra::circuit_relation(in.supports[0]);
        tri = polyhedra::circuit_triangulation(in.supports[0], b, o.circuit_sign);
    } else {
        tri = polyhedra::coherent_triangulation(in.lifted()[0]);
    }
    std::optional<viro::SignDistribution> signs;
    if (in.signs) signs = (*in.signs)[0];
    if (!o.svg.empty()) write_text(o.svg, io::triangulation_svg(tri, signs));
    emit(o, "triangulate", io::triangulation_json(tri));
    return kOk;
}

int cmd_sturmfels(const Options& o) {
    const auto in = io::support_input_from(read_input(o));
    if (!in.signs) throw InputError("sturmfels-count needs \"signs\"");
    const auto lifted = in.lifted();
    const auto count = viro::sturmfels_positive_count(lifted, *in.signs, o.jobs);
    emit(o, "sturmfels-count", io::sturmfels_json(count, lifted));
    return kOk;
}

int cmd_viro_svg(const Options& o) {
    const auto in = io::support_input_from(read_input(o));
    if (in.supports.size() != 1 || !in.signs) throw InputError("viro-svg needs one support with signs");
    const auto diagram = viro::viro_diagram_2d(in.lifted()[0], (*in.signs)[0]);
    const auto svg = io::viro_svg(diagram);
    if (!o.svg.empty()) write_text(o.svg, svg);
    Json body = io::viro_json(diagram);
    if (o.svg.empty()) body["svg"] = svg;
    emit(o, "viro-svg", body);
    return kOk;
}

// --- non-Archimedean counting ----------------------------------------------

template <class T>
int padic_count_in(const Options& o, const Json& j, const numeric::FieldSpec& f) {
    const typename extremal::FieldTraits<T>::Context ctx{f.p, f.precision};
    const auto sys = io::system_from<T>(j, ctx);
    nonarch::PhaseVector phase(sys.n, 1);
    if (j.contains("phase")) phase = j.at("phase").get<nonarch::PhaseVector>();
    if (!o.phase.empty()) phase.assign(o.phase.begin(), o.phase.end());
    if (phase.size() != sys.n) throw InputError("phase needs one residue per variable");
    const auto rep = nonarch::count_roots_by_valuation_phase(sys.polys, phase);
    Json body = io::count_report_json(rep);
    body["field"] = io::field_json(f);
    body["phase"] = phase;
    emit(o, "padic-count", body);
    return rep.complete ? kOk : kUndecided;
}

int cmd_padic_count(const Options& o) {
    const Json j = read_input(o);
    if (!j.contains("field")) throw InputError("system JSON needs a \"field\"");
    const auto f = io::field_from(j.at("field"));
    switch (f.kind) {
        case numeric::FieldKind::PAdic: return padic_count_in<numeric::PAdic>(o, j, f);
        case numeric::FieldKind::Series: return padic_count_in<numeric::Series>(o, j, f);
        case numeric::FieldKind::Real: break;
    }
    throw InputError("padic-count needs a non-Archimedean field (Qp or Fpt)");
}

// --- extremal families -----------------------------------------------------

template <class T>
Json extremal_json(const Options& o, const numeric::FieldSpec& f, const std::string& eps) {
    const typename extremal::FieldTraits<T>::Context ctx{f.p, f.precision};
    const auto e = extremal::parse_element<T>(eps, ctx);
    const auto g = extremal::gen_G_eps<T>(o.n, e, ctx);
    Json body = io::system_json(g, f);
    Json elim = Json::array();
    const auto r = extremal::eliminate_R_n(g, ctx);
    for (const auto& c : r.coefficients()) elim.push_back(io::literal(c));
    body["eliminant"] = elim;
    body["union_support"] = g.union_support();
    body["epsilon"] = eps;
    return body;
}

template <>
Json extremal_json<numeric::Rational>(const Options& o, const numeric::FieldSpec& f, const std::string& eps) {
    const auto e = numeric::parse_rational(eps);
    const auto g = extremal::gen_G_eps<numeric::Rational>(o.n, e);
    Json body = io::system_json(g, f);
    Json elim = Json::array();
    const auto r = extremal::eliminate_R_n(g);
    for (const auto& c : r.coefficients()) elim.push_back(io::literal(c));
    body["eliminant"] = elim;
    body["union_support"] = g.union_support();
    body["epsilon"] = eps;
    return body;
}

int cmd_gen_extremal(const Options& o) {
    require_n(o, 2);
    const auto f = field_spec(o);
    const auto eps = default_eps(o, f);
    Json body;
    switch (f.kind) {
        case numeric::FieldKind::Real: body = extremal_json<numeric::Rational>(o, f, eps); break;
        case numeric::FieldKind::PAdic: body = extremal_json<numeric::PAdic>(o, f, eps); break;
        case numeric::FieldKind::Series: body = extremal_json<numeric::Series>(o, f, eps); break;
    }
    emit(o, "gen-extremal", body);
    return kOk;
}

int cmd_verify_family(const Options& o) {
    require_n(o, 2);
    const auto f = field_spec(o);
    if (o.sweep > 0) {
        const auto s = extremal::sweep_epsilon(o.n, f, o.sweep, policy(o));
        Json body = io::sweep_json(s);
        body["n"] = o.n;
        body["field"] = io::field_json(f);
        emit(o, "verify-family", body);
        return s.smallest ? kOk : kRefuted;
    }
    const auto rep = extremal::verify_family(o.n, f, default_eps(o, f), policy(o));
    emit(o, "verify-family", io::verification_json(rep));
    return status_exit(rep.status);
}

int cmd_lemma_tri(const Options& o) {
    require_n(o, 2);
    const auto c = extremal::lemma_tri_certificate(o.n);
    emit(o, "lemma-tri", io::lemma_tri_json(c));
    return c.certified() ? kOk : kRefuted;
}

int cmd_block_system(const Options& o) {
    const auto f = field_spec(o);
    const auto rep = extremal::certify_block_system(o.n, o.k, f, default_eps(o, f), policy(o));
    emit(o, "block-system", io::block_json(rep));
    return status_exit(rep.status);
}

int cmd_poonen(const Options& o) {
    if (o.p == 0 || o.k == 0) throw InputError("poonen-rk needs --p and --k");
    numeric::FieldSpec::series(o.p).validate();
    std::vector<extremal::PoonenVariant> variants;
    if (o.variant == "printed" || o.variant == "both") variants.push_back(extremal::PoonenVariant::Printed);
    if (o.variant == "shifted" || o.variant == "both") variants.push_back(extremal::PoonenVariant::DigitShifted);
    if (variants.empty()) throw InputError("--variant must be printed, shifted or both");
    Json reports = Json::array();
    bool shifted_ok = true;
    for (auto v : variants) {
        const auto r = extremal::poonen_report(o.p, static_cast<unsigned>(o.k), v);
        if (v == extremal::PoonenVariant::DigitShifted && r.brute_force_phase1 != r.target) shifted_ok = false;
        reports.push_back(io::poonen_json(r));
    }
    emit(o, "poonen-rk", {{"p", o.p}, {"k", o.k}, {"reports", reports}});
    return shifted_ok ? kOk : kRefuted;
}

// --- straight-line programs ------------------------------------------------

int cmd_slp_roots(const Options& o) {
    if (o.n < 1 || o.k < 1) throw InputError("slp-roots needs --n and --k (both >= 1)");
    const auto fam = slp::gen_hnk(o.n, o.k);
    std::vector<unsigned long> primes = o.p ? std::vector<unsigned long>{o.p} : fam.primes;
    const long ceiling = precision_ceiling();
    Json reports = Json::array();
    bool all = true;
    for (auto p : primes) {
        const auto rep = slp::count_slp_roots_padic(fam, p, 0, ceiling, o.jobs);
        all = all && rep.certified();
        reports.push_back(io::slp_roots_json(rep, fam));
    }
    emit(o, "slp-roots",
         {{"n", o.n}, {"k", o.k}, {"program", io::slp_program_json(fam.program.pruned())}, {"reports", reports}});
    return all ? kOk : kRefuted;
}

int cmd_slp_real(const Options& o) {
    if (o.n < 1 || o.k < 1) throw InputError("slp-real-check needs --n and --k (both >= 1)");
    const auto fam = slp::gen_hnk(o.n, o.k);
    const auto cert = slp::certify_no_real_roots(fam);
    emit(o, "slp-real-check", io::slp_real_json(cert));
    return cert.certified() ? kOk : kUndecided;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mixed volumes, fewnomial extremal families and straight-line programs"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--out", o.out, "write JSON here instead of stdout");
        c->add_option("--jobs", o.jobs, "worker threads (0 = runtime default)");
    };
    auto json_in = [&](CLI::App* c) {
        c->add_option("--in", o.in, "input JSON file ('-' or absent: stdin)");
        c->add_option("--json", o.json, "inline input JSON");
    };
    auto field_opts = [&](CLI::App* c) {
        c->add_option("--field", o.field, "R, Qp or Fpt")->check(CLI::IsMember({"R", "Qp", "Fpt"}));
        c->add_option("--p", o.p, "residue characteristic");
        c->add_option("--eps", o.eps, "epsilon literal (R: 1/4, Qp: p, Fpt: t by default)");
        c->add_option("--precision", o.precision, "initial p-adic / t-adic digits");
    };

    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
    auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
        auto* c = app.add_subcommand(name, help);
        common(c);
        commands.emplace_back(c, fn);
        return c;
    };

    auto* mv = add("mixed-volume", "mixed volume of n supports", cmd_mixed_volume);
    json_in(mv);
    mv->add_flag("--allow-perturb", o.allow_perturb, "perturb a non-mixed explicit lifting");
    auto* mc = add("mixed-cells", "mixed cells and lower facets of a lifted tuple", cmd_mixed_cells);
    json_in(mc);
    mc->add_option("--svg", o.svg, "planar subdivision picture");
    auto* tr = add("triangulate", "coherent or circuit triangulation of one support", cmd_triangulate);
    json_in(tr);
    tr->add_option("--svg", o.svg, "planar triangulation picture");
    tr->add_option("--circuit-sign", o.circuit_sign, "+1 or -1: triangulate a circuit by relation signs")
        ->check(CLI::IsMember({-1, 1}));
    auto* sc = add("sturmfels-count", "positive roots of a deformed system", cmd_sturmfels);
    json_in(sc);
    auto* vs = add("viro-svg", "Viro diagram of a planar signed lifting", cmd_viro_svg);
    json_in(vs);
    vs->add_option("--svg", o.svg, "picture file (otherwise embedded in the JSON)");
    auto* pc = add("padic-count", "roots by valuation and phase of a system", cmd_padic_count);
    json_in(pc);
    pc->add_option("--phase", o.phase, "phase residues, one per variable (default all 1)");

    auto* ge = add("gen-extremal", "the circuit family G_eps and its eliminant", cmd_gen_extremal);
    ge->add_option("--n", o.n)->required();
    field_opts(ge);
    auto* vf = add("verify-family", "certify n+1 phase-one roots of G_eps", cmd_verify_family);
    vf->add_option("--n", o.n)->required();
    field_opts(vf);
    vf->add_option("--sweep", o.sweep, "try eps = rho^k for k = 1..K instead");
    auto* lt = add("lemma-tri", "lower hull certificate of the lifted triangles", cmd_lemma_tri);
    lt->add_option("--n", o.n)->required();
    auto* bs = add("block-system", "block construction with k equations worth of support", cmd_block_system);
    bs->add_option("--n", o.n)->required();
    bs->add_option("--k", o.k)->required();
    field_opts(bs);
    auto* po = add("poonen-rk", "phase-one roots of the product r_k over F_p((t))", cmd_poonen);
    po->add_option("--p", o.p)->required();
    po->add_option("--k", o.k)->required();
    po->add_option("--variant", o.variant, "printed, shifted or both")
        ->check(CLI::IsMember({"printed", "shifted", "both"}));
    auto* sr = add("slp-roots", "Z_p roots of h_{n,k}/(x(1-x))", cmd_slp_roots);
    sr->add_option("--n", o.n)->required();
    sr->add_option("--k", o.k)->required();
    sr->add_option("--p", o.p, "one prime (default: every prime up to p_k)");
    auto* rr = add("slp-real-check", "no real roots of h_{n,k}/(x(1-x))", cmd_slp_real);
    rr->add_option("--n", o.n)->required();
    rr->add_option("--k", o.k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }
    try {
        for (const auto& [c, fn] : commands)
            if (c->parsed()) return fn(o);
    } catch (const Undecided& e) {
        std::cerr << "undecided: " << e.what() << " (partial count " << e.partial_count() << ")\n";
        return kUndecided;
    } catch (const PrecisionError& e) {
        std::cerr << "undecided: " << e.what() << '\n';
        return kUndecided;
    } catch (const NotHenselLiftable& e) {
        std::cerr << "undecided: " << e.what() << '\n';
        return kUndecided;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const GuardrailError& e) {
        std::cerr << "guardrail: " << e.what() << '\n';
        return kGuardrail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kGuardrail;
    }
    return kInput;
}
