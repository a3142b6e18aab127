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
#include "fewnomial/numeric/padic.hpp"
#include "fewnomial/numeric/rational.hpp"
#include "fewnomial/numeric/series.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace fewnomial::numeric {

inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const PAdic& x) { return x.is_zero(); }
inline bool is_zero_value(const Series& x) { return x.is_zero(); }

/// x * k for a machine integer k, without costing x any precision.
inline Rational scale(const Rational& x, long k) { return x * k; }
inline PAdic scale(const PAdic& x, long k) {
    PAdicContext ctx{x.prime(), std::max(1L, x.relative_precision())};
    if (x.is_zero()) return x * PAdic::from_integer(Integer(k), {x.prime(), 1});
    return x * PAdic::from_integer(Integer(k), ctx);
}
inline Series scale(const Series& x, long k) {
    SeriesContext ctx{x.prime(), std::max(1L, x.relative_precision())};
    return x * Series::from_integer(Integer(k), ctx);
}

/// Dense univariate polynomial, coefficients from low to high degree.
/// Leading coefficients that are zero (exactly, or at the known precision)
/// are dropped, so degree() is the degree certified by the data.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

    static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }
    /// a*x + b
    static Polynomial linear(T a, T b) { return Polynomial(std::vector<T>{std::move(b), std::move(a)}); }

    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::size_t size() const noexcept { return c_.size(); }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const T& leading() const { return c_.back(); }
    const std::vector<T>& coefficients() const noexcept { return c_; }

    T eval(const T& x) const {
        if (c_.empty()) throw InputError("evaluating the zero polynomial needs a zero element");
        T acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        std::vector<T> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(scale(c_[i], static_cast<long>(i)));
        return Polynomial(std::move(d));
    }

    /// f(a + b*y) as a polynomial in y.
    Polynomial compose_affine(const T& a, const T& b) const {
        if (c_.empty()) return {};
        Polynomial shift = linear(b, a);
        Polynomial acc = constant(c_.back());
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * shift + constant(c_[i]);
        return acc;
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        const auto& longer = f.size() >= g.size() ? f.c_ : g.c_;
        const auto& shorter = f.size() >= g.size() ? g.c_ : f.c_;
        std::vector<T> out = longer;
        for (std::size_t i = 0; i < shorter.size(); ++i) out[i] = out[i] + shorter[i];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& f) {
        std::vector<T> out;
        out.reserve(f.size());
        for (const auto& c : f.c_) out.push_back(-c);
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        if (f.c_.empty() || g.c_.empty()) return {};
        std::vector<std::optional<T>> acc(f.size() + g.size() - 1);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) {
                T term = f.c_[i] * g.c_[j];
                auto& slot = acc[i + j];
                slot = slot ? *slot + term : term;
            }
        std::vector<T> out;
        out.reserve(acc.size());
        for (auto& a : acc) out.push_back(std::move(*a));
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const T& s, const Polynomial& f) {
        std::vector<T> out;
        for (const auto& c : f.c_) out.push_back(s * c);
        return Polynomial(std::move(out));
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& f, const Polynomial& g) { return f.c_ == g.c_; }

private:
    void trim() {
        while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using RationalPolynomial = Polynomial<Rational>;

inline bool is_zero_value(const RationalPolynomial& f) { return f.is_zero(); }

/// Exact division of rational polynomials; throws when b is zero.
std::pair<RationalPolynomial, RationalPolynomial> divide(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

}  // namespace fewnomial::numeric
