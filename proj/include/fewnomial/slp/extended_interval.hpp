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
#include "fewnomial/slp/slp.hpp"

#include <string>

namespace fewnomial::slp {

/// Rational or +-infinity.
struct ExtendedRational {
    int infinite = 0;  // -1, 0 or +1
    Rational value;

    static ExtendedRational neg_inf() { return {-1, 0}; }
    static ExtendedRational pos_inf() { return {1, 0}; }
    int sign() const { return infinite != 0 ? infinite : sgn(value); }
    std::string to_string() const;

    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return a.infinite == b.infinite && (a.infinite != 0 || a.value == b.value);
    }
};

/// Closed interval of the extended line; lets a half-line be pushed through
/// a program. Endpoint products use 0 * inf = 0, which is the right bound
/// for the product of two closed intervals.
class ExtendedInterval {
public:
    ExtendedInterval() = default;
    ExtendedInterval(Rational point) : lo_{0, point}, hi_{0, point} {}  // NOLINT: points embed
    ExtendedInterval(ExtendedRational lo, ExtendedRational hi);

    static ExtendedInterval at_most(Rational hi) { return {ExtendedRational::neg_inf(), {0, std::move(hi)}}; }
    static ExtendedInterval at_least(Rational lo) { return {{0, std::move(lo)}, ExtendedRational::pos_inf()}; }

    const ExtendedRational& lo() const noexcept { return lo_; }
    const ExtendedRational& hi() const noexcept { return hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    std::string to_string() const;

    friend ExtendedInterval operator+(const ExtendedInterval& a, const ExtendedInterval& b);
    friend ExtendedInterval operator-(const ExtendedInterval& a);
    friend ExtendedInterval operator-(const ExtendedInterval& a, const ExtendedInterval& b) { return a + (-b); }
    friend ExtendedInterval operator*(const ExtendedInterval& a, const ExtendedInterval& b);

private:
    ExtendedRational lo_, hi_;
};

template <>
inline ExtendedInterval one_like(const ExtendedInterval&) { return Rational(1); }

}  // namespace fewnomial::slp
