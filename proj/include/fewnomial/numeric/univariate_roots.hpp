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

#include "fewnomial/error.hpp"
#include "fewnomial/numeric/local_field.hpp"
#include "fewnomial/numeric/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace fewnomial::numeric {

/// One edge of a lower convex hull: rise/run and horizontal lattice length.
struct NewtonSegment {
    Rational slope;
    long length = 0;

    friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower-hull edges of a planar point set with distinct x, left to right.
std::vector<NewtonSegment> lower_hull_slopes(std::vector<std::pair<long, long>> points);

/// Newton polygon of f from the valuations of its nonzero coefficients.
/// A monomial gives an empty list. The negated slopes are the valuations
/// of the roots in the algebraic closure, each with multiplicity = length.
template <NonArchimedean T>
std::vector<NewtonSegment> newton_polygon_slopes(const Polynomial<T>& f) {
    std::vector<std::pair<long, long>> pts;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f[i].is_zero()) pts.emplace_back(static_cast<long>(i), f[i].valuation());
    return lower_hull_slopes(std::move(pts));
}

/// Governs the precision-doubling retry loop used by every non-Archimedean
/// counting routine.
struct PrecisionPolicy {
    long initial = 64;
    long ceiling = 4096;
    long depth_bound = 32;
};

/// Runs fn(precision) with precision = initial, 2*initial, ... until it
/// stops throwing Undecided / PrecisionError; past the ceiling the last
/// failure propagates.
template <class Fn>
auto with_precision_doubling(const PrecisionPolicy& policy, Fn&& fn) {
    for (long precision = policy.initial;; precision *= 2) {
        try {
            return fn(precision);
        } catch (const Undecided&) {
            if (precision * 2 > policy.ceiling) throw;
        } catch (const PrecisionError&) {
            if (precision * 2 > policy.ceiling) throw;
        }
    }
}

namespace detail {

template <NonArchimedean T>
long min_absolute_precision(const Polynomial<T>& f) {
    long m = std::numeric_limits<long>::max();
    for (const auto& c : f.coefficients()) m = std::min(m, c.absolute_precision());
    return m;
}

template <NonArchimedean T>
long valuation_or_precision(const T& x) {
    return x.is_zero() ? x.absolute_precision() : x.valuation();
}

}  // namespace detail

/// Newton iteration from r to a root r* with ord f(r*) >= target. f must
/// have integral coefficients and r must be integral; the criterion
/// ord f(r) > 2 ord f'(r) is checked first and NotHenselLiftable thrown when
/// it fails. The returned root carries the precision the data supports.
template <NonArchimedean T>
T hensel_lift_root(const Polynomial<T>& f, const T& r, long target) {
    if (f.degree() < 1) throw InputError("Hensel lifting needs a nonconstant polynomial");
    if (!r.is_zero() && r.valuation() < 0) throw InputError("Hensel lifting needs an integral start");
    for (const auto& c : f.coefficients())
        if (!c.is_zero() && c.valuation() < 0)
            throw InputError("Hensel lifting needs integral coefficients");
    const Polynomial<T> df = f.derivative();
    const long work = std::max(target, detail::min_absolute_precision(f)) + 1;
    T x = r.lifted(work);
    T fx = f.eval(x);
    T dfx = df.eval(x);
    if (dfx.is_zero()) throw NotHenselLiftable("f'(r) vanishes at the working precision");
    const long d = dfx.valuation();
    if (!fx.is_zero() && fx.valuation() <= 2 * d)
        throw NotHenselLiftable("ord f(r) = " + std::to_string(fx.valuation()) +
                                " is not larger than 2 ord f'(r) = " + std::to_string(2 * d));
    for (int step = 0; step < 64; ++step) {
        if (fx.is_zero() || fx.valuation() >= target) {
            if (fx.is_zero() && fx.absolute_precision() < target)
                throw PrecisionError("coefficients too coarse to reach the requested precision");
            return x;
        }
        x = (x - fx / dfx).lifted(work);
        fx = f.eval(x);
        dfx = df.eval(x);
    }
    throw PrecisionError("Hensel iteration did not reach the requested precision");
}

/// A certified simple root in L* found by root search.
template <NonArchimedean T>
struct LocalRoot {
    T value;
    long valuation = 0;
    std::uint64_t phase = 0;
    long derivative_valuation = 0;
    long search_depth = 0;  // residue refinements needed before Hensel applied
};

struct RootSearchOptions {
    bool phase_one_only = false;
    long depth_bound = 32;
};

namespace detail {

template <NonArchimedean T>
class RootSearch {
public:
    RootSearch(const RootSearchOptions& opts, unsigned long p) : opts_(opts), p_(p) {}

    // Roots of g in the valuation ring whose residue lies in [first, last].
    std::vector<std::pair<T, long>> integral_roots(const Polynomial<T>& g, std::uint64_t first,
                                                   std::uint64_t last, long depth) {
        std::vector<std::pair<T, long>> out;
        const long min_abs = min_absolute_precision(g);
        if (min_abs < 1) throw Undecided("coefficients lost all precision during root search", found_);
        std::vector<std::uint64_t> gbar(g.size(), 0);
        for (std::size_t i = 0; i < g.size(); ++i)
            if (!g[i].is_zero() && g[i].valuation() == 0) gbar[i] = g[i].residue();
        std::vector<std::uint64_t> dbar;
        for (std::size_t i = 1; i < gbar.size(); ++i)
            dbar.push_back(static_cast<std::uint64_t>(static_cast<unsigned __int128>(gbar[i]) * (i % p_) % p_));
        const typename T::Context ctx{p_, min_abs + 1};
        for (std::uint64_t r = first; r <= last; ++r) {
            if (eval_mod(gbar, r) != 0) continue;
            if (eval_mod(dbar, r) != 0) {
                out.emplace_back(hensel_lift_root(g, T::from_residue(r, ctx), min_abs), depth);
                ++found_;
                continue;
            }
            if (depth >= opts_.depth_bound)
                throw Undecided("root search exceeded the multiple-root depth bound", found_);
            // Zoom into the residue disc r + rho*O and renormalize.
            const T shift = T::from_residue(r, ctx);
            const T rho = T::uniformizer_power(1, ctx);
            const Polynomial<T> h = g.compose_affine(shift, rho);
            long m = std::numeric_limits<long>::max();
            for (const auto& c : h.coefficients())
                if (!c.is_zero()) m = std::min(m, c.valuation());
            if (m == std::numeric_limits<long>::max())
                throw Undecided("polynomial indistinguishable from zero during root search", found_);
            const T down = T::uniformizer_power(-m, ctx);
            std::vector<T> hc;
            for (const auto& c : h.coefficients()) hc.push_back(c * down);
            for (auto& [z, zd] : integral_roots(Polynomial<T>(std::move(hc)), 0, p_ - 1, depth + 1))
                out.emplace_back(shift + rho * z, zd);
        }
        return out;
    }

private:
    std::uint64_t eval_mod(const std::vector<std::uint64_t>& c, std::uint64_t r) const {
        unsigned __int128 acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = (acc * r + c[i]) % p_;
        return static_cast<std::uint64_t>(acc);
    }

    RootSearchOptions opts_;
    unsigned long p_;
    long found_ = 0;
};

}  // namespace detail

/// Every simple root of f in L* (optionally only those with phase 1), found
/// by splitting on Newton-polygon slopes, reducing modulo the maximal
/// ideal, Hensel-lifting simple residual roots and refining multiple ones.
/// Throws Undecided when a residual root stays multiple past the depth
/// bound or precision runs out. Roots at 0 are ignored.
template <NonArchimedean T>
std::vector<LocalRoot<T>> find_roots(const Polynomial<T>& f, const RootSearchOptions& opts = {}) {
    if (f.is_zero()) throw InputError("root search on the zero polynomial");
    std::vector<LocalRoot<T>> roots;
    if (f.degree() < 1) return roots;
    const unsigned long p = f.leading().prime();
    std::size_t low = 0;
    while (f[low].is_zero()) ++low;
    Polynomial<T> g0(std::vector<T>(f.coefficients().begin() + static_cast<long>(low), f.coefficients().end()));
    const auto segments = newton_polygon_slopes(g0);
    {
        // A coefficient known only to be small must lie strictly above the hull.
        long sx = 0;
        Rational sy = g0[0].valuation();
        for (const auto& seg : segments) {
            for (long i = sx + 1; i < sx + seg.length; ++i) {
                const auto& c = g0[static_cast<std::size_t>(i)];
                if (c.is_zero() && Rational(c.absolute_precision()) <= sy + seg.slope * (i - sx))
                    throw Undecided("a coefficient is too imprecise to fix the Newton polygon", 0);
            }
            sy += seg.slope * seg.length;
            sx += seg.length;
        }
    }
    const Polynomial<T> df = f.derivative();
    detail::RootSearch<T> search(opts, p);
    long x = 0;
    for (const auto& seg : segments) {
        const long start = x;
        x += seg.length;
        if (seg.slope.get_den() != 1) continue;  // root valuation not in Z
        const long s = -seg.slope.get_num().get_si();
        const long m = g0[static_cast<std::size_t>(start)].valuation() + start * s;
        const typename T::Context ctx{p, detail::min_absolute_precision(g0) + 1};
        std::vector<T> scaled;
        for (std::size_t i = 0; i < g0.size(); ++i)
            scaled.push_back(g0[i] * T::uniformizer_power(static_cast<long>(i) * s - m, ctx));
        const std::uint64_t last = opts.phase_one_only ? 1 : p - 1;
        for (auto& [y, depth] : search.integral_roots(Polynomial<T>(std::move(scaled)), 1, last, 0)) {
            LocalRoot<T> root{y * T::uniformizer_power(s, ctx)};
            root.valuation = s;
            root.phase = y.residue();
            root.derivative_valuation = detail::valuation_or_precision(df.eval(root.value));
            root.search_depth = depth;
            roots.push_back(std::move(root));
        }
    }
    return roots;
}

/// Number of roots of f in L with generalized phase 1. Only simple roots
/// are ever certified, so a multiple root surfaces as Undecided and the
/// count with multiplicity coincides with the distinct count.
template <NonArchimedean T>
long count_phase1_roots_univariate(const Polynomial<T>& f, long depth_bound = 32) {
    RootSearchOptions opts;
    opts.phase_one_only = true;
    opts.depth_bound = depth_bound;
    return static_cast<long>(find_roots(f, opts).size());
}

}  // namespace fewnomial::numeric
