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

#include "fewnomial/numeric/interval.hpp"
#include "fewnomial/numeric/polynomial.hpp"

#include <vector>

namespace fewnomial::numeric {

/// Interval endpoint: a rational or one of the two infinities.
struct Bound {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rational value;

    static Bound neg_inf() { return {Kind::NegInf, {}}; }
    static Bound pos_inf() { return {Kind::PosInf, {}}; }
    static Bound at(Rational v) { return {Kind::Finite, std::move(v)}; }
};

/// Sturm chain of the square-free part of f, held as primitive integer
/// polynomials. Signs are evaluated exactly.
class SturmSequence {
public:
    explicit SturmSequence(const RationalPolynomial& f);

    /// Sign variations of the chain at x (zeros skipped).
    long variations(const Bound& x) const;
    /// Distinct real roots in (a, b].
    long count(const Bound& a, const Bound& b) const;
    /// Sign of the square-free part at x.
    int sign_at(const Rational& x) const;

    std::size_t length() const noexcept { return chain_.size(); }
    /// Every real root has absolute value strictly below this bound.
    Rational root_bound() const;

private:
    std::vector<std::vector<Integer>> chain_;
};

/// Number of distinct real roots of f in (a, b]. Throws InputError for the
/// zero polynomial.
long sturm_count(const RationalPolynomial& f, const Bound& a, const Bound& b);

/// Disjoint half-open intervals (lo, hi], each containing exactly one root
/// of f in (a, b], sorted increasingly.
std::vector<RationalInterval> isolate_real_roots(const RationalPolynomial& f, const Bound& a,
                                                 const Bound& b);

/// Shrinks an isolating interval (lo, hi] until hi - lo <= max_width.
RationalInterval refine_root(const SturmSequence& seq, RationalInterval iv,
                             const Rational& max_width);

}  // namespace fewnomial::numeric
