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

#include "fewnomial/extremal/verify.hpp"

#include "fewnomial/numeric/sturm.hpp"

namespace fewnomial::extremal {

using numeric::Bound;

std::string to_string(Status s) {
    switch (s) {
        case Status::Certified: return "certified";
        case Status::Refuted: return "refuted";
        case Status::Undecided: return "undecided";
    }
    return "undecided";
}

VerificationReport verify_family_real(std::size_t n, const Rational& eps) {
    VerificationReport rep;
    rep.n = n;
    rep.field = "R";
    rep.epsilon = numeric::to_string(eps);
    rep.target = static_cast<long>(n) + 1;
    const auto g = gen_G_eps<Rational>(n, eps);
    const auto betas = circuit_betas(g);
    const auto r = eliminate_R_n(g);
    rep.methods = {"elimination to R_n", "Sturm count on (0, inf)", "interval back-substitution"};
    const numeric::SturmSequence seq(r);
    const long total_real = seq.count(Bound::neg_inf(), Bound::pos_inf());
    // Distinct real roots equal to the degree means every root is simple.
    const bool all_simple = total_real == r.degree();
    auto intervals = numeric::isolate_real_roots(r, Bound::at(0), Bound::pos_inf());
    rep.found = static_cast<long>(intervals.size());
    bool undecided = false;
    for (auto iv : intervals) {
        RootReport rr;
        std::vector<RationalInterval> zeta;
        bool done = false;
        for (int attempt = 0; attempt < 64 && !done; ++attempt) {
            try {
                zeta = back_substitute(betas, iv);
                done = true;
                for (const auto& z : zeta)
                    if (z.contains_zero()) done = false;
            } catch (const PrecisionError&) {
                done = false;
            }
            if (!done) iv = numeric::refine_root(seq, iv, iv.width() / 1024);
        }
        rr.u_interval = iv;
        if (!done) {
            undecided = true;
            rep.roots.push_back(std::move(rr));
            continue;
        }
        rr.coordinate_intervals = zeta;
        rr.all_phase_one = true;
        for (const auto& z : zeta) {
            rr.phases.push_back(z.positive() ? 1 : -1);
            if (!z.positive()) rr.all_phase_one = false;
        }
        if (rr.all_phase_one) ++rep.certified;
        rep.roots.push_back(std::move(rr));
    }
    if (undecided) {
        rep.status = Status::Undecided;
        rep.note = "some coordinate enclosure still contains 0";
    } else if (rep.certified == rep.target && all_simple) {
        rep.status = Status::Certified;
    } else {
        rep.status = Status::Refuted;
        rep.note = "positive root count for this epsilon is " + std::to_string(rep.certified);
    }
    return rep;
}

namespace {

template <class T>
VerificationReport verify_local_impl(std::size_t n, const numeric::FieldSpec& field, const std::string& eps_text,
                                     const numeric::PrecisionPolicy& policy) {
    VerificationReport rep;
    rep.n = n;
    rep.field = field.name();
    rep.epsilon = eps_text;
    rep.target = static_cast<long>(n) + 1;
    rep.methods = {"elimination to R_n", "Newton polygon", "Hensel lifting", "back-substitution"};
    try {
        numeric::with_precision_doubling(policy, [&](long precision) {
            const typename T::Context ctx{field.p, precision};
            const T eps = parse_element<T>(eps_text, ctx);
            const auto g = gen_G_eps<T>(n, eps, ctx);
            const auto betas = circuit_betas(g);
            const auto r = eliminate_R_n(g, ctx);
            const auto roots = numeric::find_roots(r, {false, policy.depth_bound});
            VerificationReport out = rep;
            out.precision = precision;
            out.found = static_cast<long>(roots.size());
            for (const auto& root : roots) {
                RootReport rr;
                rr.u_literal = root.value.to_string();
                const auto zeta = back_substitute(betas, root.value);
                // zeta_1^2 must reproduce u at least in its leading digit.
                const T diff = zeta[0] * zeta[0] - root.value;
                if (!diff.is_zero() && diff.valuation() <= root.value.valuation())
                    throw PrecisionError("back-substitution lost too much precision");
                rr.all_phase_one = true;
                for (const auto& z : zeta) {
                    if (z.is_zero()) throw PrecisionError("a coordinate is indistinguishable from zero");
                    rr.coordinates.push_back(z.to_string());
                    rr.valuations.push_back(z.valuation());
                    rr.phases.push_back(static_cast<long>(z.residue()));
                    if (z.residue() != 1) rr.all_phase_one = false;
                }
                if (rr.all_phase_one) ++out.certified;
                out.roots.push_back(std::move(rr));
            }
            out.status = out.certified == out.target ? Status::Certified : Status::Refuted;
            if (out.status == Status::Refuted)
                out.note = "phase-1 root count for this epsilon is " + std::to_string(out.certified);
            rep = std::move(out);
            return 0;
        });
    } catch (const Undecided& e) {
        rep.status = Status::Undecided;
        rep.precision = policy.ceiling;
        rep.note = e.what();
    } catch (const PrecisionError& e) {
        rep.status = Status::Undecided;
        rep.precision = policy.ceiling;
        rep.note = e.what();
    }
    return rep;
}

}  // namespace

VerificationReport verify_family_local(std::size_t n, const numeric::FieldSpec& field, const std::string& eps,
                                       const numeric::PrecisionPolicy& policy) {
    field.validate();
    switch (field.kind) {
        case numeric::FieldKind::PAdic: return verify_local_impl<PAdic>(n, field, eps, policy);
        case numeric::FieldKind::Series: return verify_local_impl<Series>(n, field, eps, policy);
        default: throw InputError("verify_family_local needs Qp or Fpt");
    }
}

VerificationReport verify_family(std::size_t n, const numeric::FieldSpec& field, const std::string& eps,
                                 const numeric::PrecisionPolicy& policy) {
    if (field.kind == numeric::FieldKind::Real) return verify_family_real(n, numeric::parse_rational(eps));
    return verify_family_local(n, field, eps, policy);
}

SweepResult sweep_epsilon(std::size_t n, const numeric::FieldSpec& field, long max_k,
                          const numeric::PrecisionPolicy& policy) {
    SweepResult out;
    for (long k = 1; k <= max_k; ++k) {
        std::string eps;
        if (field.kind == numeric::FieldKind::Real)
            eps = "1/" + numeric::ipow(Integer(2), static_cast<unsigned long>(k)).get_str();
        else
            eps = (field.kind == numeric::FieldKind::PAdic ? "p^" : "t^") + std::to_string(k) + "*1";
        if (field.kind == numeric::FieldKind::Series) eps = "t^" + std::to_string(k) + "*(1)";
        const auto rep = verify_family(n, field, eps, policy);
        out.counts.emplace_back(k, rep.certified);
        if (rep.status == Status::Certified && !out.smallest) out.smallest = k;
    }
    return out;
}

}  // namespace fewnomial::extremal
