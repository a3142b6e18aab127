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

#include "fewnomial/numeric/rational.hpp"

#include "fewnomial/error.hpp"

#include <cctype>

namespace fewnomial::numeric {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s))
        throw InputError("malformed integer literal '" + std::string(s) + "'");
    std::string text(s[0] == '+' ? s.substr(1) : s);
    return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& raw) {
    Rational q = raw;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational rpow(const Rational& base, long exponent) {
    if (exponent >= 0) {
        Rational r(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw InputError("negative power of zero");
    Rational r(ipow(base.get_den(), -exponent), ipow(base.get_num(), -exponent));
    r.canonicalize();
    return r;
}

long valuation(const Integer& z, unsigned long p) {
    if (z == 0) throw InputError("valuation of zero");
    Integer pp(p);
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t()));
}

long valuation(const Rational& q, unsigned long p) {
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned long nth_prime(unsigned k) {
    if (k == 0) throw InputError("primes are indexed from 1");
    unsigned long candidate = 1;
    for (unsigned found = 0; found < k;)
        if (is_prime(++candidate)) ++found;
    return candidate;
}

Integer primorial(unsigned k) {
    Integer c = 1;
    for (unsigned i = 1; i <= k; ++i) c *= nth_prime(i);
    return c;
}

}  // namespace fewnomial::numeric
