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

#include "fewnomial/numeric/series.hpp"

#include "fewnomial/error.hpp"

#include <algorithm>
#include <cctype>

namespace fewnomial::numeric {

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    unsigned __int128 base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw InputError("inverse of zero residue");
    return mod_pow(a, p - 2, p);
}

namespace {

void require_same_prime(const Series& a, const Series& b) {
    if (a.prime() != b.prime()) throw InputError("series operands over different primes");
}

std::uint64_t reduce(const Integer& z, unsigned long p) {
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

}  // namespace

Series Series::zero(unsigned long p, long absolute_precision) {
    Series z;
    z.p_ = p;
    z.val_ = absolute_precision;
    return z;
}

Series Series::from_parts(unsigned long p, long valuation, std::vector<Digit> digits,
                          long relative_precision) {
    if (relative_precision <= 0) return zero(p, valuation + relative_precision);
    digits.resize(static_cast<std::size_t>(relative_precision), 0);
    std::size_t lead = 0;
    while (lead < digits.size() && digits[lead] % p == 0) ++lead;
    if (lead == digits.size()) return zero(p, valuation + relative_precision);
    Series s;
    s.p_ = p;
    s.zero_ = false;
    s.val_ = valuation + static_cast<long>(lead);
    s.digits_.assign(digits.begin() + static_cast<long>(lead), digits.end());
    for (auto& d : s.digits_) d %= p;
    return s;
}

Series Series::from_integer(const Integer& value, const Context& ctx) {
    return from_parts(ctx.p, 0, {reduce(value, ctx.p)}, ctx.precision);
}

Series Series::from_rational(const Rational& value, const Context& ctx) {
    std::uint64_t den = reduce(value.get_den(), ctx.p);
    if (den == 0) throw InputError("rational with denominator divisible by the characteristic");
    std::uint64_t num = reduce(value.get_num(), ctx.p);
    return from_parts(ctx.p, 0, {static_cast<Digit>((unsigned __int128)num * mod_inverse(den, ctx.p) % ctx.p)},
                      ctx.precision);
}

Series Series::from_residue(Digit residue, const Context& ctx) {
    return from_parts(ctx.p, 0, {residue % ctx.p}, ctx.precision);
}

Series Series::uniformizer_power(long k, const Context& ctx) {
    return from_parts(ctx.p, k, {1}, ctx.precision);
}

namespace {

// Parses "c0+c1*t+c2*t^3-..." into digit positions, reduced mod p.
std::vector<std::pair<long, long>> parse_t_polynomial(const std::string& s) {
    std::vector<std::pair<long, long>> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        long sgn = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sgn = -sgn;
            ++i;
        }
        std::size_t start = i;
        while (i < s.size() && s[i] != '+' && (s[i] != '-' || (i > start && s[i - 1] == '^'))) ++i;
        std::string term = s.substr(start, i - start);
        if (term.empty()) throw InputError("malformed series literal");
        long coeff = 1, exponent = 0;
        auto tpos = term.find('t');
        std::string cpart = tpos == std::string::npos ? term : term.substr(0, tpos);
        if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
        try {
            if (!cpart.empty()) {
                std::size_t used = 0;
                coeff = std::stol(cpart, &used);
                if (used != cpart.size()) throw InputError("");
            }
            if (tpos != std::string::npos) {
                exponent = 1;
                if (tpos + 1 < term.size()) {
                    if (term[tpos + 1] != '^') throw InputError("");
                    std::size_t used = 0;
                    std::string e = term.substr(tpos + 2);
                    exponent = std::stol(e, &used);
                    if (used != e.size()) throw InputError("");
                }
            }
        } catch (const std::exception&) {
            throw InputError("malformed series term '" + term + "'");
        }
        terms.emplace_back(exponent, sgn * coeff);
    }
    return terms;
}

}  // namespace

Series Series::parse(std::string_view literal, const Context& ctx) {
    std::string s;
    for (char c : literal)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw InputError("empty series literal");
    long shift = 0;
    std::string body = s;
    if (s.rfind("t^", 0) == 0 && s.find('*') != std::string::npos && s.find('(') != std::string::npos) {
        auto star = s.find('*');
        try {
            shift = std::stol(s.substr(2, star - 2));
        } catch (const std::exception&) {
            throw InputError("malformed series exponent in '" + s + "'");
        }
        if (s.size() < star + 3 || s[star + 1] != '(' || s.back() != ')')
            throw InputError("malformed series literal '" + s + "'");
        body = s.substr(star + 2, s.size() - star - 3);
    }
    auto terms = parse_t_polynomial(body);
    long lo = terms.front().first;
    for (auto& [e, c] : terms) lo = std::min(lo, e);
    long hi = lo;
    for (auto& [e, c] : terms) hi = std::max(hi, e);
    std::vector<Digit> digits(static_cast<std::size_t>(hi - lo + 1), 0);
    const long p = static_cast<long>(ctx.p);
    for (auto& [e, c] : terms) {
        auto& d = digits[static_cast<std::size_t>(e - lo)];
        d = static_cast<Digit>(((static_cast<long>(d) + c) % p + p) % p);
    }
    // Exact input: pad to the requested relative precision.
    std::size_t lead = 0;
    while (lead < digits.size() && digits[lead] == 0) ++lead;
    if (lead == digits.size()) return zero(ctx.p, ctx.precision);
    long rel = std::max<long>(ctx.precision, static_cast<long>(digits.size() - lead));
    return from_parts(ctx.p, shift + lo, std::move(digits), rel + static_cast<long>(lead));
}

Series::Digit Series::residue() const {
    if (zero_) throw PrecisionError("generalized phase of an element indistinguishable from zero");
    return digits_.front();
}

Series Series::lifted(long absolute_precision) const {
    if (zero_) return zero(p_, absolute_precision);
    return from_parts(p_, val_, digits_, absolute_precision - val_);
}

Series Series::operator-() const {
    if (zero_) return *this;
    Series r = *this;
    for (auto& d : r.digits_) d = (p_ - d) % p_;
    return r;
}

Series Series::inverse() const {
    if (zero_) throw PrecisionError("inverse of an element indistinguishable from zero");
    const std::size_t n = digits_.size();
    std::vector<Digit> inv(n, 0);
    const Digit a0inv = mod_inverse(digits_[0], p_);
    inv[0] = a0inv;
    for (std::size_t k = 1; k < n; ++k) {
        unsigned __int128 acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += (unsigned __int128)digits_[i] * inv[k - i];
        Digit s = static_cast<Digit>(acc % p_);
        inv[k] = static_cast<Digit>((unsigned __int128)((p_ - s) % p_) * a0inv % p_);
    }
    return from_parts(p_, -val_, std::move(inv), static_cast<long>(n));
}

Series operator+(const Series& a, const Series& b) {
    require_same_prime(a, b);
    const unsigned long p = a.p_;
    const long A = std::min(a.absolute_precision(), b.absolute_precision());
    if (a.zero_ && b.zero_) return Series::zero(p, A);
    if (a.zero_) return Series::from_parts(p, b.val_, b.digits_, A - b.val_);
    if (b.zero_) return Series::from_parts(p, a.val_, a.digits_, A - a.val_);
    const long m = std::min(a.val_, b.val_);
    if (m >= A) return Series::zero(p, A);
    std::vector<Series::Digit> s(static_cast<std::size_t>(A - m), 0);
    auto accumulate = [&](const Series& x) {
        for (std::size_t i = 0; i < x.digits_.size(); ++i) {
            long pos = x.val_ - m + static_cast<long>(i);
            if (pos >= A - m) break;
            auto& d = s[static_cast<std::size_t>(pos)];
            d = (d + x.digits_[i]) % p;
        }
    };
    accumulate(a);
    accumulate(b);
    return Series::from_parts(p, m, std::move(s), A - m);
}

Series operator*(const Series& a, const Series& b) {
    require_same_prime(a, b);
    if (a.zero_ || b.zero_) return Series::zero(a.p_, a.val_ + b.val_);
    const std::size_t n = std::min(a.digits_.size(), b.digits_.size());
    const unsigned long p = a.p_;
    std::vector<Series::Digit> c(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        unsigned __int128 acc = 0;
        for (std::size_t i = 0; i <= k; ++i) acc += (unsigned __int128)a.digits_[i] * b.digits_[k - i];
        c[k] = static_cast<Series::Digit>(acc % p);
    }
    return Series::from_parts(p, a.val_ + b.val_, std::move(c), static_cast<long>(n));
}

bool operator==(const Series& a, const Series& b) {
    return a.p_ == b.p_ && a.zero_ == b.zero_ && a.val_ == b.val_ && a.digits_ == b.digits_;
}

std::string Series::to_string() const {
    if (zero_) return "O(t^" + std::to_string(val_) + ")";
    std::string body;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] == 0) continue;
        if (!body.empty()) body += "+";
        body += std::to_string(digits_[i]);
        if (i == 1) body += "*t";
        else if (i > 1) body += "*t^" + std::to_string(i);
    }
    return "t^" + std::to_string(val_) + "*(" + body + ")";
}

bool is_square(const Series& x) {
    if (x.is_zero()) throw PrecisionError("square test on an element indistinguishable from zero");
    if (x.valuation() % 2 != 0) return false;
    const unsigned long p = x.prime();
    if (p == 2) {
        // In characteristic 2 the squares are exactly the series in t^2.
        const auto& d = x.digits();
        for (std::size_t i = 1; i < d.size(); i += 2)
            if (d[i] != 0) return false;
        throw PrecisionError("characteristic-2 square test is undecidable from finitely many digits");
    }
    return mod_pow(x.residue(), (p - 1) / 2, p) == 1;
}

}  // namespace fewnomial::numeric
