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
#include "fewnomial/numeric/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

namespace fewnomial::numeric {

/// Closed interval [lo, hi] with exact rational endpoints.
class RationalInterval {
public:
    RationalInterval() = default;
    RationalInterval(Rational point) : lo_(point), hi_(point) {}  // NOLINT: points embed
    RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw InputError("empty interval");
    }

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
    bool positive() const { return lo_ > 0; }
    bool negative() const { return hi_ < 0; }

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo_ + b.lo_, a.hi_ + b.hi_};
    }
    friend RationalInterval operator-(const RationalInterval& a) { return {-a.hi_, -a.lo_}; }
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo_ - b.hi_, a.hi_ - b.lo_};
    }
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
        Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
    }
    friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
        if (b.contains_zero()) throw PrecisionError("interval division by an interval containing 0");
        Rational q1 = a.lo_ / b.lo_, q2 = a.lo_ / b.hi_, q3 = a.hi_ / b.lo_, q4 = a.hi_ / b.hi_;
        return {std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4})};
    }
    friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    Rational lo_;
    Rational hi_;
};

}  // namespace fewnomial::numeric
