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

#include "fewnomial/slp/certify.hpp"

#include "fewnomial/numeric/sturm.hpp"

#include <algorithm>
#include <exception>
#include <omp.h>

namespace fewnomial::slp {

using numeric::PAdic;

namespace {

long pow3(std::size_t e) {
    long r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= 3;
    return r;
}

// Lower bound on the valuation of a p-adic that may be zero at precision.
long valuation_floor(const PAdic& x) { return x.valuation(); }

// Exact valuation, or PrecisionError when the element is not known nonzero
// below `limit`.
long exact_valuation(const PAdic& x, long limit, const char* what) {
    if (x.is_zero() || x.valuation() >= limit)
        throw PrecisionError(std::string(what) + " is not determined at this precision");
    return x.valuation();
}

struct Lift {
    CertifiedRoot root;
    bool hensel = true;
    bool nested = true;
    std::string failure;
};

class Engine {
public:
    Engine(const HnkFamily& fam, long precision) : fam_(fam), n_(precision) {}

    std::vector<Dual<PAdic>> trace(const PAdic& x) const { return slp_trace(fam_.program, x); }
    const Dual<PAdic>& at(const std::vector<Dual<PAdic>>& t, long entry) const {
        return t[static_cast<std::size_t>(entry + 1)];
    }

    // Newton-lifts a root of h_m to the nearby root of c^(3^(m-1)) - h_m.
    Lift lift(const CertifiedRoot& from, std::size_t m) const {
        Lift out;
        const long f_entry = fam_.factor[m - 1];
        const long h_next = fam_.h[m];
        auto t = trace(from.approx.lifted(n_));

        // Roots of h_m stay roots of h_{m+1}; check Hensel there too.
        {
            const auto& g = at(t, h_next);
            const long dv = exact_valuation(g.derivative, std::min(n_, from.radius), "h' at an old root");
            if (!(valuation_floor(g.value) > 2 * dv)) out.nested = false;
        }

        const auto& f0 = at(t, f_entry);
        const long v0 = exact_valuation(f0.value, n_, "f at a starting point");
        const long d0 = exact_valuation(f0.derivative, n_, "f' at a starting point");
        if (!(v0 > 2 * d0)) {
            out.hensel = false;
            out.failure = "Hensel criterion fails: ord f = " + std::to_string(v0) +
                          ", ord f' = " + std::to_string(d0);
            return out;
        }
        PAdic x = from.approx.lifted(n_);
        for (int iter = 0; iter < 128; ++iter) {
            const auto& fx = at(t, f_entry);
            if (fx.value.is_zero()) break;
            x = (x - fx.value / fx.derivative).lifted(n_);
            t = trace(x);
        }
        const auto& fx = at(t, f_entry);
        const long d = exact_valuation(fx.derivative, n_, "f' after Newton");
        const long v = valuation_floor(fx.value);
        if (!(v > 2 * d)) throw PrecisionError("Newton iteration did not converge at this precision");
        out.root.approx = x;
        out.root.radius = v - d;
        out.root.level = m + 1;
        return out;
    }

    LevelCheck check_level(std::vector<CertifiedRoot>& roots, std::size_t m) const {
        LevelCheck lc;
        lc.m = m;
        lc.roots = static_cast<long>(roots.size());
        lc.distinct_modulus = pow3(m - 1);
        lc.expected_derivative_valuation = (pow3(m - 1) - 1) / 2;
        lc.derivative_valuations = true;
        for (auto& r : roots) {
            const auto t = trace(r.approx);
            const auto& h = at(t, fam_.h[m - 1]);
            r.derivative_valuation = exact_valuation(h.derivative, std::min(n_, r.radius), "h'");
            if (r.derivative_valuation != lc.expected_derivative_valuation) lc.derivative_valuations = false;
        }
        lc.distinct = true;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                const long sep = std::min(roots[i].radius, roots[j].radius);
                const long v = exact_valuation(roots[i].approx - roots[j].approx, sep, "root separation");
                if (v >= lc.distinct_modulus) lc.distinct = false;
            }
        return lc;
    }

private:
    const HnkFamily& fam_;
    long n_;
};

SlpRootReport run(const HnkFamily& fam, unsigned long p, long precision, int jobs) {
    SlpRootReport rep;
    rep.n = fam.n;
    rep.k = fam.k;
    rep.p = p;
    rep.precision = precision;
    rep.expected = fam.quotient_degree();
    rep.quotient_degree_bound = fam.program.degree_bound();

    const Engine engine(fam, precision);
    const numeric::PAdicContext ctx{p, precision};
    std::vector<CertifiedRoot> roots{{PAdic::zero(p, precision), CertifiedRoot::kExact, 1, 0},
                                     {PAdic::from_integer(1, ctx), CertifiedRoot::kExact, 1, 0}};
    rep.levels.push_back(engine.check_level(roots, 1));

    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    for (std::size_t m = 1; m < fam.n; ++m) {
        std::vector<Lift> lifts(roots.size());
        std::vector<std::exception_ptr> errors(roots.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::size_t i = 0; i < roots.size(); ++i) {
            try {
                lifts[i] = engine.lift(roots[i], m);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& l : lifts) {
            rep.nested = rep.nested && l.nested;
            if (!l.hensel) {
                rep.hensel = false;
                if (rep.failure.empty()) rep.failure = l.failure;
                continue;
            }
            roots.push_back(l.root);
        }
        rep.levels.push_back(engine.check_level(roots, m + 1));
    }

    const auto q0 = slp_eval(fam.program, Rational(0), false).value;
    const auto q1 = slp_eval(fam.program, Rational(1), false).value;
    rep.quotient_nonzero_at_0_and_1 = q0 != 0 && q1 != 0;
    rep.quotient_roots = static_cast<long>(
        std::count_if(roots.begin(), roots.end(), [](const CertifiedRoot& r) { return r.level >= 2; }));
    rep.roots = std::move(roots);
    return rep;
}

}  // namespace

bool SlpRootReport::certified() const {
    const bool levels_ok = std::all_of(levels.begin(), levels.end(), [](const LevelCheck& l) {
        return l.distinct && l.derivative_valuations && l.roots == (1L << l.m);
    });
    return failure.empty() && hensel && nested && levels_ok && quotient_nonzero_at_0_and_1 &&
           quotient_roots == expected && quotient_degree_bound == expected;
}

SlpRootReport count_slp_roots_padic(const HnkFamily& fam, unsigned long p, long precision, long ceiling,
                                    int jobs) {
    if (std::find(fam.primes.begin(), fam.primes.end(), p) == fam.primes.end())
        throw InputError("p = " + std::to_string(p) + " is not among the first " + std::to_string(fam.k) +
                         " primes");
    const long needed = pow3(fam.n - 1) + 1;
    if (precision == 0) precision = std::max(needed, std::min(2 * pow3(fam.n - 1) + 16, ceiling));
    if (precision < needed)
        throw InputError("precision must be at least 3^(n-1) + 1 = " + std::to_string(needed));
    for (long prec = precision;; prec *= 2) {
        if (prec > ceiling)
            throw Undecided("root separation needs more than " + std::to_string(ceiling) + " digits", 0);
        try {
            return run(fam, p, prec, jobs);
        } catch (const PrecisionError&) {
            if (prec * 2 > ceiling)
                throw Undecided("root separation needs more than " + std::to_string(prec) + " digits", 0);
        }
    }
}

bool RealRootCertificate::certified() const {
    return chain && interval && simple_roots_0_and_1 && (!sturm_real_roots || *sturm_real_roots == 0);
}

RealRootCertificate certify_no_real_roots(const HnkFamily& fam) {
    RealRootCertificate cert;
    cert.n = fam.n;
    cert.k = fam.k;

    // h_1 = x(1-x) = 1/4 - (x - 1/2)^2 has range (-inf, 1/4]; each step
    // y -> (P - y) y is increasing for y <= P/2, so the range stays a
    // half-line whose top is the image of the previous top.
    cert.chain = true;
    Rational top(1, 4);
    cert.maxima.push_back(top);
    Rational power = Rational(fam.c);
    for (std::size_t m = 1; m < fam.n; ++m) {
        if (m > 1) power = power * power * power;
        if (!(2 * top < power)) cert.chain = false;
        top = (power - top) * top;
        cert.maxima.push_back(top);
    }
    if (fam.n >= 2) {
        cert.h2_maximum = cert.maxima[1];
        cert.h2_within_three_eighths = *cert.h2_maximum <= Rational(3, 8);
    }

    // Enclose the quotient over the whole line.
    std::vector<ExtendedInterval> work{ExtendedInterval::at_most(0), ExtendedInterval::at_least(1)};
    std::vector<std::pair<Rational, Rational>> unit{{0, 1}};
    cert.interval = true;
    for (const auto& piece : work) {
        auto range = slp_eval(fam.program, piece, false).value;
        cert.pieces.emplace_back(piece, range);
        if (range.contains_zero()) cert.interval = false;
    }
    while (!unit.empty()) {
        auto [lo, hi] = unit.back();
        unit.pop_back();
        ExtendedInterval piece({0, lo}, {0, hi});
        auto range = slp_eval(fam.program, piece, false).value;
        if (range.contains_zero()) {
            if (hi - lo < Rational(1, 1024)) {
                cert.interval = false;
                cert.pieces.emplace_back(piece, range);
                continue;
            }
            const Rational mid = (lo + hi) / 2;
            unit.emplace_back(mid, hi);
            unit.emplace_back(lo, mid);
            continue;
        }
        cert.pieces.emplace_back(piece, range);
    }

    const auto h = fam.h_program(fam.n);
    cert.simple_roots_0_and_1 = slp_eval(h, Rational(0)).derivative != 0 && slp_eval(h, Rational(1)).derivative != 0;

    if (fam.n <= 4) {
        cert.method = "sturm";
        const auto q = expand(fam.program.pruned());
        cert.sturm_real_roots =
            q.degree() <= 0 ? 0 : numeric::sturm_count(q, numeric::Bound::neg_inf(), numeric::Bound::pos_inf());
    } else {
        cert.method = "interval";
    }
    return cert;
}

}  // namespace fewnomial::slp
