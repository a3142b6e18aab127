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
#include "fewnomial/nonarch/nonarch.hpp"
#include "fewnomial/numeric/interval.hpp"
#include "fewnomial/numeric/local_field.hpp"
#include "fewnomial/numeric/polynomial.hpp"

#include <set>
#include <string>
#include <vector>

namespace fewnomial::extremal {

using numeric::Integer;
using numeric::PAdic;
using numeric::Polynomial;
using numeric::Rational;
using numeric::RationalInterval;
using numeric::Series;
using polyhedra::Point;

/// Building constants in each coefficient domain.
struct RealContext {};

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    using Context = RealContext;
    static Rational from_int(long k, const Context&) { return Rational(k); }
    static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct FieldTraits<PAdic> {
    using Context = numeric::PAdicContext;
    static PAdic from_int(long k, const Context& c) { return PAdic::from_integer(Integer(k), c); }
    static bool is_zero(const PAdic& x) { return x.is_zero(); }
};

template <>
struct FieldTraits<Series> {
    using Context = numeric::SeriesContext;
    static Series from_int(long k, const Context& c) { return Series::from_integer(Integer(k), c); }
    static bool is_zero(const Series& x) { return x.is_zero(); }
};

/// Parses a field element. "p" and "t" name the uniformizer.
template <class T>
T parse_element(const std::string& literal, const typename FieldTraits<T>::Context& ctx) {
    if constexpr (std::is_same_v<T, Rational>) {
        return numeric::parse_rational(literal);
    } else {
        if (literal == "p" || literal == "t") return T::uniformizer_power(1, ctx);
        return T::parse(literal, ctx);
    }
}

template <class T>
using SparsePolynomial = nonarch::ValuedPolynomial<T>;

/// n sparse Laurent polynomials in n variables.
template <class T>
struct SparseSystem {
    std::size_t n = 0;
    std::vector<SparsePolynomial<T>> polys;

    /// Distinct exponent vectors over all equations, sorted.
    std::vector<Point> union_support() const {
        std::set<Point> s;
        for (const auto& f : polys)
            for (const auto& t : f.terms) s.insert(t.exp);
        return {s.begin(), s.end()};
    }
};

template <class T>
T power(const T& x, long k, const typename FieldTraits<T>::Context& ctx) {
    T acc = FieldTraits<T>::from_int(1, ctx);
    for (long i = 0; i < k; ++i) acc = acc * x;
    return acc;
}

/// Rows x1 x2 - (eps + x1^2), x_i x_{i+1} - (1 + eps^(2i-3) x1^2) for
/// 1 < i < n, and x_n - (1 + eps^(2n-3) x1^2).
template <class T>
SparseSystem<T> gen_G_eps(std::size_t n, const T& eps, const typename FieldTraits<T>::Context& ctx = {}) {
    if (n < 2) throw InputError("the circuit family needs n >= 2");
    if (FieldTraits<T>::is_zero(eps)) throw InputError("epsilon must be nonzero");
    using F = FieldTraits<T>;
    SparseSystem<T> sys{n, {}};
    for (std::size_t i = 1; i <= n; ++i) {
        Point lead(n, 0), origin(n, 0), sq(n, 0);
        sq[0] = 2;
        if (i < n) {
            lead[i - 1] = 1;
            lead[i] = 1;
        } else {
            lead[n - 1] = 1;
        }
        SparsePolynomial<T> f{n, {}};
        f.terms.push_back({lead, F::from_int(1, ctx)});
        if (i == 1) {
            f.terms.push_back({origin, -eps});
            f.terms.push_back({sq, F::from_int(-1, ctx)});
        } else {
            f.terms.push_back({origin, F::from_int(-1, ctx)});
            f.terms.push_back({sq, -power(eps, long(2 * i - 3), ctx)});
        }
        sys.polys.push_back(std::move(f));
    }
    return sys;
}

/// The linear polynomials beta_i(u) with g_i = x^(lead_i) - beta_i(x1^2).
template <class T>
std::vector<Polynomial<T>> circuit_betas(const SparseSystem<T>& g) {
    const std::size_t n = g.n;
    std::vector<Polynomial<T>> betas;
    Point origin(n, 0), sq(n, 0);
    sq[0] = 2;
    for (const auto& f : g.polys) {
        if (f.terms.size() != 3) throw InputError("each equation of the circuit family is a trinomial");
        const T* c0 = nullptr;
        const T* c2 = nullptr;
        for (const auto& t : f.terms) {
            if (t.exp == origin) c0 = &t.coeff;
            if (t.exp == sq) c2 = &t.coeff;
        }
        if (!c0 || !c2) throw InputError("equation lacks the constant or x1^2 term");
        betas.push_back(Polynomial<T>::linear(-*c2, -*c0));
    }
    return betas;
}

/// u * beta_2^2 beta_4^2 ... - beta_1^2 beta_3^2 ..., the polynomial whose
/// roots are the squares of first coordinates of the roots.
template <class T>
Polynomial<T> eliminate_R_n(const SparseSystem<T>& g, const typename FieldTraits<T>::Context& ctx = {}) {
    using F = FieldTraits<T>;
    const auto betas = circuit_betas(g);
    Polynomial<T> even = Polynomial<T>::linear(F::from_int(1, ctx), F::from_int(0, ctx));
    Polynomial<T> odd = Polynomial<T>::constant(F::from_int(1, ctx));
    for (std::size_t i = 0; i < betas.size(); ++i) {
        const auto sq = betas[i] * betas[i];
        if ((i + 1) % 2 == 0)
            even = even * sq;
        else
            odd = odd * sq;
    }
    auto r = even - odd;
    if (r.degree() != static_cast<long>(g.n) + 1) throw InputError("eliminant does not have degree n+1");
    return r;
}

/// zeta_n = beta_n(u), zeta_i = beta_i(u) / zeta_(i+1). Works over any
/// domain with field operations, including rational intervals.
template <class T, class U>
std::vector<U> back_substitute(const std::vector<Polynomial<T>>& betas, const U& u) {
    const std::size_t n = betas.size();
    std::vector<U> zeta(n);
    auto eval = [&](const Polynomial<T>& b) { return U(b[1]) * u + U(b[0]); };
    zeta[n - 1] = eval(betas[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) zeta[i] = eval(betas[i]) / zeta[i + 1];
    return zeta;
}

}  // namespace fewnomial::extremal
