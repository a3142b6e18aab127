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

// Independent reference computations used only by tests. Nothing here
// calls into the library under test beyond plain GMP integer types.

#include <gmpxx.h>

#include <cstdint>
#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace fewnomial::testing {

inline long vp(const mpz_class& z, unsigned long p, long cap) {
    if (z == 0) return cap;
    mpz_class t = z;
    long v = 0;
    while (v < cap && mpz_divisible_ui_p(t.get_mpz_t(), p)) {
        t /= p;
        ++v;
    }
    return v;
}

inline mpz_class eval_int(const std::vector<mpz_class>& c, const mpz_class& x) {
    mpz_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

inline std::vector<mpz_class> derivative_int(const std::vector<mpz_class>& c) {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
    return d;
}

/// Determinant by Bareiss fraction-free elimination.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    mpz_class prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sgn * a[n - 1][n - 1];
}

/// Resultant of f and f' via the Sylvester matrix (up to sign and the
/// leading coefficient, which is 1 for the monic inputs used here).
inline mpz_class discriminant_monic(const std::vector<mpz_class>& f) {
    const auto g = derivative_int(f);
    const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
    return bareiss_det(std::move(s));
}

/// Integral roots of a monic integer polynomial found by enumerating all
/// residues mod p^m. Every class x with ord f(x) > 2 ord f'(x) = 2d pins
/// down a unique root in x + p^(d+1) Z_p, agreeing with x mod p^(ord f(x) - d),
/// so roots are counted once per distinct x mod p^(d+1). Enumeration is
/// complete whenever every root has d < m, which ord(disc) < m guarantees.
/// Each entry holds the root's phase (first nonzero p-adic digit), or 0
/// when the known digits are all zero and the phase is undetermined.
inline std::vector<unsigned long> exhaustive_root_phases(const std::vector<mpz_class>& f, unsigned long p,
                                                         unsigned m) {
    const auto df = derivative_int(f);
    mpz_class pm;
    mpz_ui_pow_ui(pm.get_mpz_t(), p, m);
    const long cap = 4 * static_cast<long>(m);
    std::map<std::pair<long, mpz_class>, unsigned long> clusters;
    for (mpz_class x = 0; x < pm; ++x) {
        const long d = vp(eval_int(df, x), p, cap);
        const long v = vp(eval_int(f, x), p, cap);
        if (d >= static_cast<long>(m) || v <= 2 * d) continue;
        mpz_class key_mod, known_mod;
        mpz_ui_pow_ui(key_mod.get_mpz_t(), p, static_cast<unsigned long>(d + 1));
        mpz_ui_pow_ui(known_mod.get_mpz_t(), p, static_cast<unsigned long>(std::min<long>(m, v - d)));
        mpz_class known = x % known_mod;
        unsigned long phase = 0;
        if (known != 0) {
            while (mpz_divisible_ui_p(known.get_mpz_t(), p)) known /= p;
            phase = mpz_fdiv_ui(known.get_mpz_t(), p);
        }
        auto key = std::make_pair(d, mpz_class(x % key_mod));
        auto it = clusters.find(key);
        if (it == clusters.end()) clusters.emplace(key, phase);
        else if (it->second == 0) it->second = phase;
    }
    std::vector<unsigned long> out;
    for (const auto& [k, ph] : clusters) out.push_back(ph);
    return out;
}

inline long exhaustive_phase1_count(const std::vector<mpz_class>& f, unsigned long p, unsigned m) {
    long n = 0;
    for (auto ph : exhaustive_root_phases(f, p, m)) n += ph == 1;
    return n;
}

/// Random monic integer polynomial of the given degree with coefficients in
/// [-bound, bound], re-drawn until ord_p(disc) < m, f(0) != 0 and every
/// root's phase is visible mod p^m, so that the exhaustive oracle above is
/// complete and exact.
inline std::vector<mpz_class> random_monic_for_oracle(std::mt19937& rng, unsigned degree, long bound,
                                                     unsigned long p, unsigned m) {
    std::uniform_int_distribution<long> coef(-bound, bound);
    for (;;) {
        std::vector<mpz_class> f;
        for (unsigned i = 0; i < degree; ++i) f.emplace_back(coef(rng));
        f.emplace_back(1);
        const mpz_class disc = discriminant_monic(f);
        if (disc == 0) continue;
        if (f[0] == 0 || vp(disc, p, 64) >= static_cast<long>(m)) continue;
        bool determined = true;
        for (auto ph : exhaustive_root_phases(f, p, m)) determined = determined && ph != 0;
        if (determined) return f;
    }
}

}  // namespace fewnomial::testing
