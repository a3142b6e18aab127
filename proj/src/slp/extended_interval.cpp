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

#include "fewnomial/slp/extended_interval.hpp"

#include <algorithm>
#include <array>

namespace fewnomial::slp {

std::string ExtendedRational::to_string() const {
    if (infinite < 0) return "-inf";
    if (infinite > 0) return "+inf";
    return numeric::to_string(value);
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite != b.infinite) return a.infinite < b.infinite;
    return a.infinite == 0 && a.value < b.value;
}

ExtendedInterval::ExtendedInterval(ExtendedRational lo, ExtendedRational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_ || lo_.infinite > 0 || hi_.infinite < 0) throw InputError("empty extended interval");
}

std::string ExtendedInterval::to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

namespace {

// Sum of two endpoints of the same side; inf + (-inf) cannot arise there.
ExtendedRational add(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite != 0) return a;
    if (b.infinite != 0) return b;
    return {0, a.value + b.value};
}

ExtendedRational mul(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite == 0 && b.infinite == 0) return {0, a.value * b.value};
    const int s = a.sign() * b.sign();
    if (s == 0) return {0, 0};
    return {s, 0};
}

}  // namespace

ExtendedInterval operator+(const ExtendedInterval& a, const ExtendedInterval& b) {
    return {add(a.lo_, b.lo_), add(a.hi_, b.hi_)};
}

ExtendedInterval operator-(const ExtendedInterval& a) {
    return {{-a.hi_.infinite, -a.hi_.value}, {-a.lo_.infinite, -a.lo_.value}};
}

ExtendedInterval operator*(const ExtendedInterval& a, const ExtendedInterval& b) {
    std::array<ExtendedRational, 4> p{mul(a.lo_, b.lo_), mul(a.lo_, b.hi_), mul(a.hi_, b.lo_), mul(a.hi_, b.hi_)};
    return {*std::min_element(p.begin(), p.end()), *std::max_element(p.begin(), p.end())};
}

}  // namespace fewnomial::slp
