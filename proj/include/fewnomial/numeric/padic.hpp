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

#include "fewnomial/numeric/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace fewnomial::numeric {

/// Prime and default relative precision used when building new p-adic
/// elements from exact data.
struct PAdicContext {
    unsigned long p = 2;
    long precision = 64;
};

/// Element of Q_p known modulo p^A, stored as p^v * u with u a unit known
/// modulo p^(A - v). A zero element only records that the value lies in
/// p^A Z_p. Arithmetic propagates the absolute precision A the usual way:
/// sums keep the smaller A, products lose whatever the other factor's
/// valuation does not make up.
class PAdic {
public:
    using Context = PAdicContext;

    PAdic() = default;

    static PAdic zero(unsigned long p, long absolute_precision);
    static PAdic from_integer(const Integer& value, const Context& ctx);
    static PAdic from_rational(const Rational& value, const Context& ctx);
    static PAdic from_residue(std::uint64_t residue, const Context& ctx) {
        return from_integer(Integer(static_cast<unsigned long>(residue)), ctx);
    }
    /// p^k exactly, at the context's relative precision.
    static PAdic uniformizer_power(long k, const Context& ctx);
    /// p^valuation * unit where unit is reduced modulo p^relative_precision;
    /// p-factors in `unit` are moved into the valuation.
    static PAdic from_parts(unsigned long p, long valuation, const Integer& unit,
                            long relative_precision);
    /// Parses "p^k*u", "u" or "0" (zero at the context's precision).
    static PAdic parse(std::string_view literal, const Context& ctx);

    unsigned long prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return zero_; }
    /// Valuation of a nonzero element; for zero, the absolute precision
    /// (the valuation is at least that).
    long valuation() const noexcept { return val_; }
    long absolute_precision() const noexcept { return zero_ ? val_ : val_ + rel_; }
    long relative_precision() const noexcept { return zero_ ? 0 : rel_; }
    const Integer& unit() const noexcept { return unit_; }

    /// First nonzero p-adic digit, i.e. the generalized phase in F_p.
    std::uint64_t residue() const;

    /// Takes the stored representative as exact and re-expresses it at the
    /// given absolute precision (padding with zero digits or truncating).
    PAdic lifted(long absolute_precision) const;

    /// Rational number p^v * u given by the stored representative.
    Rational representative() const;
    /// Same, with the unit taken in (-p^r/2, p^r/2]; recovers small
    /// negative integers exactly.
    Rational balanced_representative() const;

    PAdic operator-() const;
    PAdic inverse() const;

    friend PAdic operator+(const PAdic& a, const PAdic& b);
    friend PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }
    friend PAdic operator*(const PAdic& a, const PAdic& b);
    friend PAdic operator/(const PAdic& a, const PAdic& b) { return a * b.inverse(); }
    PAdic& operator+=(const PAdic& o) { return *this = *this + o; }
    PAdic& operator-=(const PAdic& o) { return *this = *this - o; }
    PAdic& operator*=(const PAdic& o) { return *this = *this * o; }

    /// Representation equality (same prime, digits and precision).
    friend bool operator==(const PAdic& a, const PAdic& b);

    std::string to_string() const;

private:
    unsigned long p_ = 2;
    bool zero_ = true;
    long val_ = 0;   // valuation, or absolute precision when zero_
    long rel_ = 0;   // relative precision of unit_
    Integer unit_;   // in [1, p^rel_), coprime to p
};

/// Quadratic-residue style square test: decides whether a nonzero p-adic is
/// a square using its leading digits. Throws PrecisionError when too few
/// digits are known (p = 2 needs three).
bool is_square(const PAdic& x);

}  // namespace fewnomial::numeric
