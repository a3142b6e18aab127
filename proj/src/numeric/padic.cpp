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

#include "fewnomial/numeric/padic.hpp"

#include "fewnomial/error.hpp"

#include <algorithm>

namespace fewnomial::numeric {

namespace {

Integer power_of(unsigned long p, long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(std::max(0L, e)));
    return r;
}

void require_same_prime(const PAdic& a, const PAdic& b) {
    if (a.prime() != b.prime())
        throw InputError("p-adic operands over different primes");
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != ' ') out.push_back(c);
    return out;
}

}  // namespace

PAdic PAdic::zero(unsigned long p, long absolute_precision) {
    PAdic z;
    z.p_ = p;
    z.zero_ = true;
    z.val_ = absolute_precision;
    return z;
}

PAdic PAdic::from_parts(unsigned long p, long valuation, const Integer& unit,
                        long relative_precision) {
    if (relative_precision <= 0) return zero(p, valuation + relative_precision);
    Integer modulus = power_of(p, relative_precision);
    Integer u;
    mpz_mod(u.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
    if (u == 0) return zero(p, valuation + relative_precision);
    Integer pp(p);
    long shift = static_cast<long>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), pp.get_mpz_t()));
    PAdic r;
    r.p_ = p;
    r.zero_ = false;
    r.val_ = valuation + shift;
    r.rel_ = relative_precision - shift;
    r.unit_ = std::move(u);
    return r;
}

PAdic PAdic::from_integer(const Integer& value, const Context& ctx) {
    if (value == 0) return zero(ctx.p, ctx.precision);
    long v = numeric::valuation(value, ctx.p);
    return from_parts(ctx.p, 0, value, v + ctx.precision);
}

PAdic PAdic::from_rational(const Rational& value, const Context& ctx) {
    if (value == 0) return zero(ctx.p, ctx.precision);
    return from_integer(value.get_num(), ctx) / from_integer(value.get_den(), ctx);
}

PAdic PAdic::uniformizer_power(long k, const Context& ctx) {
    return from_parts(ctx.p, k, Integer(1), ctx.precision);
}

PAdic PAdic::parse(std::string_view literal, const Context& ctx) {
    std::string s = strip_spaces(literal);
    if (s.empty()) throw InputError("empty p-adic literal");
    if (s.rfind("p^", 0) == 0) {
        auto star = s.find('*');
        std::string exp_text = s.substr(2, star == std::string::npos ? std::string::npos : star - 2);
        long k = 0;
        try {
            std::size_t used = 0;
            k = std::stol(exp_text, &used);
            if (used != exp_text.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("malformed p-adic exponent in '" + s + "'");
        }
        Rational u = star == std::string::npos ? Rational(1) : parse_rational(s.substr(star + 1));
        if (u == 0) return zero(ctx.p, ctx.precision);
        return uniformizer_power(k, ctx) * from_rational(u, ctx);
    }
    if (s == "p") return uniformizer_power(1, ctx);
    return from_rational(parse_rational(s), ctx);
}

std::uint64_t PAdic::residue() const {
    if (zero_) throw PrecisionError("generalized phase of an element indistinguishable from zero");
    return mpz_fdiv_ui(unit_.get_mpz_t(), p_);
}

PAdic PAdic::lifted(long absolute_precision) const {
    if (zero_) return zero(p_, absolute_precision);
    return from_parts(p_, val_, unit_, absolute_precision - val_);
}

Rational PAdic::representative() const {
    if (zero_) return Rational(0);
    if (val_ >= 0) return Rational(unit_ * power_of(p_, val_));
    Rational r(unit_, power_of(p_, -val_));
    r.canonicalize();
    return r;
}

Rational PAdic::balanced_representative() const {
    if (zero_) return Rational(0);
    Integer u = unit_;
    const Integer modulus = power_of(p_, rel_);
    if (2 * u > modulus) u -= modulus;
    Rational r = val_ >= 0 ? Rational(u * power_of(p_, val_)) : Rational(u, power_of(p_, -val_));
    r.canonicalize();
    return r;
}

PAdic PAdic::operator-() const {
    if (zero_) return *this;
    return from_parts(p_, val_, -unit_, rel_);
}

PAdic PAdic::inverse() const {
    if (zero_) throw PrecisionError("inverse of an element indistinguishable from zero");
    Integer modulus = power_of(p_, rel_);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), modulus.get_mpz_t());
    return from_parts(p_, -val_, inv, rel_);
}

PAdic operator+(const PAdic& a, const PAdic& b) {
    require_same_prime(a, b);
    const unsigned long p = a.p_;
    const long A = std::min(a.absolute_precision(), b.absolute_precision());
    if (a.zero_ && b.zero_) return PAdic::zero(p, A);
    if (a.zero_) return PAdic::from_parts(p, b.val_, b.unit_, A - b.val_);
    if (b.zero_) return PAdic::from_parts(p, a.val_, a.unit_, A - a.val_);
    const long m = std::min(a.val_, b.val_);
    if (m >= A) return PAdic::zero(p, A);
    Integer s = a.unit_ * power_of(p, a.val_ - m) + b.unit_ * power_of(p, b.val_ - m);
    return PAdic::from_parts(p, m, s, A - m);
}

PAdic operator*(const PAdic& a, const PAdic& b) {
    require_same_prime(a, b);
    if (a.zero_ || b.zero_) return PAdic::zero(a.p_, a.val_ + b.val_);
    return PAdic::from_parts(a.p_, a.val_ + b.val_, a.unit_ * b.unit_,
                             std::min(a.rel_, b.rel_));
}

bool operator==(const PAdic& a, const PAdic& b) {
    return a.p_ == b.p_ && a.zero_ == b.zero_ && a.val_ == b.val_ && a.rel_ == b.rel_ &&
           a.unit_ == b.unit_;
}

std::string PAdic::to_string() const {
    if (zero_) return "O(p^" + std::to_string(val_) + ")";
    return "p^" + std::to_string(val_) + "*" + unit_.get_str(10);
}

bool is_square(const PAdic& x) {
    if (x.is_zero()) throw PrecisionError("square test on an element indistinguishable from zero");
    if (x.valuation() % 2 != 0) return false;
    const unsigned long p = x.prime();
    if (p == 2) {
        if (x.relative_precision() < 3)
            throw PrecisionError("2-adic square test needs three known digits");
        return mpz_fdiv_ui(x.unit().get_mpz_t(), 8) == 1;
    }
    Integer r(static_cast<unsigned long>(mpz_fdiv_ui(x.unit().get_mpz_t(), p)));
    Integer pp(p);
    return mpz_legendre(r.get_mpz_t(), pp.get_mpz_t()) == 1;
}

}  // namespace fewnomial::numeric
