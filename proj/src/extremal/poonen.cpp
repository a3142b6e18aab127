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

#include "fewnomial/extremal/poonen.hpp"

#include "fewnomial/error.hpp"
#include "fewnomial/numeric/univariate_roots.hpp"

namespace fewnomial::extremal {

namespace {

constexpr double kMaxBruteForce = 5e6;

void trim(FpT& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpT add(const FpT& a, const FpT& b, unsigned long p) {
    FpT out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
    trim(out);
    return out;
}

FpT mul(const FpT& a, const FpT& b, unsigned long p) {
    if (a.empty() || b.empty()) return {};
    FpT out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    trim(out);
    return out;
}

// Polynomials in x over F_p[t].
using XPoly = std::vector<FpT>;

XPoly xmul(const XPoly& f, const XPoly& g, unsigned long p) {
    XPoly out(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = add(out[i + j], mul(f[i], g[j], p), p);
    return out;
}

FpT eval(const XPoly& f, const FpT& x, unsigned long p) {
    FpT acc;
    for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x, p), f[i], p);
    return acc;
}

unsigned digits_for(unsigned k, PoonenVariant v) { return v == PoonenVariant::Printed ? k - 1 : k; }

}  // namespace

std::string to_string(PoonenVariant v) { return v == PoonenVariant::Printed ? "printed" : "digit-shifted"; }

std::vector<FpT> gen_poonen_rk(unsigned long p, unsigned k, PoonenVariant variant) {
    if (k < 1) throw InputError("k must be at least 1");
    const unsigned d = digits_for(k, variant);
    double factors = 1;
    for (unsigned i = 0; i < d; ++i) factors *= static_cast<double>(p);
    if (factors > 4096) throw GuardrailError("too many linear factors to expand");
    XPoly acc{FpT{1}};
    FpT z(d, 0);
    while (true) {
        // x - (z_1 + z_2 t + ...)
        FpT c(d);
        for (unsigned i = 0; i < d; ++i) c[i] = (p - z[i]) % p;
        trim(c);
        acc = xmul(acc, XPoly{c, FpT{1}}, p);
        unsigned i = 0;
        while (i < d && z[i] == p - 1) z[i++] = 0;
        if (i == d) break;
        ++z[i];
    }
    return acc;
}

PoonenReport poonen_report(unsigned long p, unsigned k, PoonenVariant variant) {
    PoonenReport rep;
    rep.p = p;
    rep.k = k;
    rep.variant = variant;
    const auto r = gen_poonen_rk(p, k, variant);
    rep.degree = static_cast<long>(r.size()) - 1;
    for (const auto& c : r)
        if (!c.empty()) ++rep.term_count;
    long target = 0, pk = 1;
    for (unsigned i = 0; i < k; ++i, pk *= static_cast<long>(p)) target += pk;
    rep.target = target;

    // Brute force over x in F_p[t] with deg x < M and first nonzero digit 1.
    const unsigned M = digits_for(k, variant) + 1;
    rep.search_digits = M;
    double space = 1;
    for (unsigned i = 0; i < M; ++i) space *= static_cast<double>(p);
    if (space > kMaxBruteForce) throw GuardrailError("brute-force search space too large");
    FpT x(M, 0);
    while (true) {
        std::size_t lead = 0;
        while (lead < M && x[lead] == 0) ++lead;
        if (lead < M && x[lead] == 1) {
            FpT xt = x;
            trim(xt);
            if (eval(r, xt, p).empty()) ++rep.brute_force_phase1;
        }
        unsigned i = 0;
        while (i < M && x[i] == p - 1) x[i++] = 0;
        if (i == M) break;
        ++x[i];
    }

    // Independent pipeline: root search in F_p((t)).
    const numeric::SeriesContext ctx{p, 64};
    std::vector<numeric::Series> coeffs;
    for (const auto& c : r) {
        if (c.empty()) {
            coeffs.push_back(numeric::Series::zero(p, 1L << 20));
            continue;
        }
        std::size_t v = 0;
        while (c[v] == 0) ++v;
        std::vector<numeric::Series::Digit> digits(c.begin() + static_cast<long>(v), c.end());
        digits.resize(static_cast<std::size_t>(ctx.precision), 0);
        coeffs.push_back(numeric::Series::from_parts(p, static_cast<long>(v), digits, ctx.precision));
    }
    rep.library_phase1 = numeric::count_phase1_roots_univariate(numeric::Polynomial<numeric::Series>(coeffs));
    return rep;
}

}  // namespace fewnomial::extremal
