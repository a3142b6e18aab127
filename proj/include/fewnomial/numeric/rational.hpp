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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fewnomial::numeric {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num/den" or a bare integer. Throws InputError on malformed text
/// or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, long exponent);

/// Largest e with p^e | z. z must be nonzero.
long valuation(const Integer& z, unsigned long p);
long valuation(const Rational& q, unsigned long p);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// The k-th prime (1-based): 2, 3, 5, ...
unsigned long nth_prime(unsigned k);
bool is_prime(unsigned long n);

/// Product of the first k primes.
Integer primorial(unsigned k);

}  // namespace fewnomial::numeric
