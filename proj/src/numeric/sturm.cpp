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

#include "fewnomial/numeric/sturm.hpp"

#include <algorithm>

namespace fewnomial::numeric {

namespace {

using IntPoly = std::vector<Integer>;  // low to high, no trailing zeros

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long deg(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

// Divides by the (positive) gcd of the coefficients.
void make_primitive(IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_integer_poly(const RationalPolynomial& f) {
    Integer l = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out;
    for (const auto& c : f.coefficients()) out.push_back(c.get_num() * (l / c.get_den()));
    trim(out);
    make_primitive(out);
    return out;
}

RationalPolynomial to_rational_poly(const IntPoly& p) {
    std::vector<Rational> c;
    for (const auto& z : p) c.emplace_back(z);
    return RationalPolynomial(std::move(c));
}

// lc(b)^(deg a - deg b + 1) * a mod b
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const long db = deg(b);
    const Integer& lb = b.back();
    long delta = deg(a) - db + 1;
    while (!a.empty() && deg(a) >= db) {
        Integer la = a.back();
        const long shift = deg(a) - db;
        for (auto& c : a) c *= lb;
        for (long i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
        trim(a);
        --delta;
    }
    for (; delta > 0; --delta)
        for (auto& c : a) c *= lb;
    return a;
}

IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

IntPoly integer_gcd(IntPoly a, IntPoly b) {
    if (deg(a) < deg(b)) std::swap(a, b);
    make_primitive(a);
    make_primitive(b);
    while (!b.empty()) {
        IntPoly r = pseudo_remainder(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int sign_of(const IntPoly& p, const Rational& x) {
    if (p.empty()) return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = p.back();
    Integer den_power = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        den_power *= den;
        acc = acc * num + p[i] * den_power;
    }
    return sgn(acc);
}

int sign_at_infinity(const IntPoly& p, bool positive) {
    if (p.empty()) return 0;
    int s = sgn(p.back());
    if (!positive && deg(p) % 2 == 1) s = -s;
    return s;
}

}  // namespace

std::pair<RationalPolynomial, RationalPolynomial> divide(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const long db = b.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(std::max(0L, a.degree() - db + 1)), Rational(0));
    for (long i = a.degree(); i >= db; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / b.leading();
        quot[static_cast<std::size_t>(i - db)] = q;
        for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return to_rational_poly(integer_gcd(to_integer_poly(a), to_integer_poly(b)));
}

SturmSequence::SturmSequence(const RationalPolynomial& f) {
    if (f.is_zero()) throw InputError("Sturm sequence of the zero polynomial");
    IntPoly p = to_integer_poly(f);
    IntPoly g = integer_gcd(p, derivative(p));
    if (deg(g) > 0) {
        auto [q, r] = divide(to_rational_poly(p), to_rational_poly(g));
        p = to_integer_poly(q);
    }
    chain_.push_back(p);
    IntPoly d = derivative(p);
    make_primitive(d);
    if (!d.empty()) chain_.push_back(d);
    while (chain_.size() >= 2 && deg(chain_.back()) > 0) {
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        IntPoly r = pseudo_remainder(a, b);
        if (r.empty()) break;
        // prem = lc(b)^k * rem; keep the sign of -rem.
        const long k = deg(a) - deg(b) + 1;
        const bool flip = !(sgn(b.back()) < 0 && k % 2 == 1);
        if (flip)
            for (auto& c : r) c = -c;
        make_primitive(r);
        chain_.push_back(std::move(r));
    }
}

long SturmSequence::variations(const Bound& x) const {
    long changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
        int s = 0;
        switch (x.kind) {
            case Bound::Kind::NegInf: s = sign_at_infinity(p, false); break;
            case Bound::Kind::PosInf: s = sign_at_infinity(p, true); break;
            case Bound::Kind::Finite: s = sign_of(p, x.value); break;
        }
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

long SturmSequence::count(const Bound& a, const Bound& b) const {
    return variations(a) - variations(b);
}

int SturmSequence::sign_at(const Rational& x) const { return sign_of(chain_.front(), x); }

Rational SturmSequence::root_bound() const {
    const IntPoly& p = chain_.front();
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rational r(abs(p[i]), abs(p.back()));
        r.canonicalize();
        m = std::max(m, r);
    }
    return m + 1;
}

long sturm_count(const RationalPolynomial& f, const Bound& a, const Bound& b) {
    return SturmSequence(f).count(a, b);
}

namespace {

long log2_estimate(const Rational& x) {
    return static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
}

// Positive ranges spanning many binary orders of magnitude are split
// geometrically; roots of the families handled here spread over exponents.
Rational split_point(const Rational& lo, const Rational& hi) {
    if (lo < 0 && hi > 0) return Rational(0);
    if (hi <= 0) return -split_point(-hi, -lo);
    if (lo == 0) return hi > 1 ? Rational(1) : hi / 16;
    if (hi > 4 * lo) {
        long e = (log2_estimate(lo) + log2_estimate(hi)) / 2;
        Rational candidate = rpow(Rational(2), e);
        if (lo < candidate && candidate < hi) return candidate;
    }
    return (lo + hi) / 2;
}

}  // namespace

std::vector<RationalInterval> isolate_real_roots(const RationalPolynomial& f, const Bound& a,
                                                 const Bound& b) {
    SturmSequence seq(f);
    const Rational bound = seq.root_bound();
    Rational lo = a.kind == Bound::Kind::Finite ? a.value : -bound;
    Rational hi = b.kind == Bound::Kind::Finite ? b.value : bound;
    if (a.kind == Bound::Kind::PosInf || b.kind == Bound::Kind::NegInf || lo >= hi) return {};
    lo = std::max(lo, Rational(-bound));
    hi = std::min(hi, bound);
    std::vector<RationalInterval> out;
    if (lo >= hi) return out;
    // (lo, hi] stack, explored left to right.
    std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
    while (!stack.empty()) {
        auto [l, h] = stack.back();
        stack.pop_back();
        long n = seq.count(Bound::at(l), Bound::at(h));
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(l, h);
            continue;
        }
        Rational m = split_point(l, h);
        stack.emplace_back(m, h);
        stack.emplace_back(l, m);
    }
    std::sort(out.begin(), out.end(),
              [](const RationalInterval& x, const RationalInterval& y) { return x.lo() < y.lo(); });
    return out;
}

RationalInterval refine_root(const SturmSequence& seq, RationalInterval iv, const Rational& max_width) {
    while (iv.width() > max_width) {
        Rational m = (iv.lo() + iv.hi()) / 2;
        if (seq.count(Bound::at(iv.lo()), Bound::at(m)) == 1)
            iv = RationalInterval(iv.lo(), m);
        else
            iv = RationalInterval(m, iv.hi());
    }
    return iv;
}

}  // namespace fewnomial::numeric
