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
#include "fewnomial/numeric/padic.hpp"
#include "fewnomial/numeric/rational.hpp"
#include "fewnomial/numeric/series.hpp"

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

namespace fewnomial::numeric {

/// Non-Archimedean coefficient domain with residue field F_p: PAdic or
/// Series.
template <class T>
concept NonArchimedean = requires(const T& a, const T& b, const typename T::Context& ctx,
                                  long k, const Integer& z) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.valuation() } -> std::convertible_to<long>;
    { a.residue() } -> std::convertible_to<std::uint64_t>;
    { a.prime() } -> std::convertible_to<unsigned long>;
    { a.absolute_precision() } -> std::convertible_to<long>;
    { a.lifted(k) } -> std::convertible_to<T>;
    { T::from_integer(z, ctx) } -> std::convertible_to<T>;
    { T::from_residue(std::uint64_t{}, ctx) } -> std::convertible_to<T>;
    { T::uniformizer_power(k, ctx) } -> std::convertible_to<T>;
};

enum class FieldKind { Real, PAdic, Series };

/// {"field": "R" | "Qp" | "Fpt", "p": <prime>, "precision": <int>}
struct FieldSpec {
    FieldKind kind = FieldKind::Real;
    unsigned long p = 0;
    long precision = 64;

    static FieldSpec real() { return {FieldKind::Real, 0, 0}; }
    static FieldSpec padic(unsigned long p, long precision = 64) { return {FieldKind::PAdic, p, precision}; }
    static FieldSpec series(unsigned long p, long precision = 64) { return {FieldKind::Series, p, precision}; }

    /// Throws InputError unless p is prime for the non-Archimedean kinds.
    void validate() const;
    std::string name() const;  // "R", "Qp", "Fpt"
};

FieldKind parse_field_kind(const std::string& name);

/// ord and generalized phase. Over R the valuation -log|x| is kept
/// symbolically as |x|; the phase is the sign. Over Q_p and F_p((t)) the
/// valuation is an integer and the phase is the first nonzero digit.
struct ValuationPhase {
    bool is_zero = false;
    std::optional<Rational> absolute_value;  // Archimedean only
    long ord = 0;                            // non-Archimedean only
    long phase = 0;                          // +-1 over R, residue in [1, p) otherwise
};

ValuationPhase valuation_and_phase(const Rational& x);
ValuationPhase valuation_and_phase(const PAdic& x);
ValuationPhase valuation_and_phase(const Series& x);

}  // namespace fewnomial::numeric
