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
#include <vector>

namespace fewnomial::numeric {

struct SeriesContext {
    unsigned long p = 2;
    long precision = 64;
};

/// Truncated Laurent series over F_p (p prime): t^v * (c_0 + c_1 t + ...),
/// c_0 != 0, with the digits known up to t^(A-1). Same precision
/// conventions as PAdic.
class Series {
public:
    using Context = SeriesContext;
    using Digit = std::uint64_t;

    Series() = default;

    static Series zero(unsigned long p, long absolute_precision);
    static Series from_integer(const Integer& value, const Context& ctx);
    static Series from_rational(const Rational& value, const Context& ctx);
    static Series from_residue(Digit residue, const Context& ctx);
    static Series uniformizer_power(long k, const Context& ctx);
    static Series from_parts(unsigned long p, long valuation, std::vector<Digit> digits,
                             long relative_precision);
    /// Parses "t^k*(c0+c1*t+...)", "t^k", "t", an integer constant or "0".
    static Series parse(std::string_view literal, const Context& ctx);

    unsigned long prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return zero_; }
    long valuation() const noexcept { return val_; }
    long absolute_precision() const noexcept {
        return zero_ ? val_ : val_ + static_cast<long>(digits_.size());
    }
    long relative_precision() const noexcept { return zero_ ? 0 : static_cast<long>(digits_.size()); }
    const std::vector<Digit>& digits() const noexcept { return digits_; }

    Digit residue() const;
    Series lifted(long absolute_precision) const;

    Series operator-() const;
    Series inverse() const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend bool operator==(const Series& a, const Series& b);

    std::string to_string() const;

private:
    unsigned long p_ = 2;
    bool zero_ = true;
    long val_ = 0;
    std::vector<Digit> digits_;
};

bool is_square(const Series& x);

/// Modular helpers on F_p shared by the residue-field code.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace fewnomial::numeric
