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
#include "fewnomial/numeric/interval.hpp"
#include "fewnomial/numeric/padic.hpp"
#include "fewnomial/numeric/polynomial.hpp"
#include "fewnomial/numeric/series.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fewnomial::slp {

using numeric::Integer;
using numeric::Rational;

enum class Op { Add, Sub, Mul };

char op_symbol(Op op);

/// Entry `lhs op rhs`. Index -1 is the constant 1, index 0 is x1, and
/// index i >= 1 names the result of instruction i.
struct Instruction {
    Op op;
    long lhs;
    long rhs;
    friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// Straight-line program in one variable. Its length (the number of
/// instructions) is an upper bound on tau of whatever it computes.
class Slp {
public:
    static constexpr long kOne = -1;
    static constexpr long kX = 0;

    Slp() = default;

    /// Appends an instruction and returns its index.
    long emit(Op op, long lhs, long rhs);
    long add(long a, long b) { return emit(Op::Add, a, b); }
    long sub(long a, long b) { return emit(Op::Sub, a, b); }
    long mul(long a, long b) { return emit(Op::Mul, a, b); }
    /// Builds a positive integer from 1 by binary doubling; O(log m) steps.
    long integer(const Integer& m);
    /// a^e by square and multiply.
    long power(long a, unsigned long e);

    std::size_t length() const noexcept { return code_.size(); }
    const std::vector<Instruction>& code() const noexcept { return code_; }
    /// Entry holding the result; defaults to the last instruction (x1 when empty).
    long output() const noexcept { return output_; }
    void set_output(long index);

    /// Copy keeping only the instructions the output depends on, renumbered.
    Slp pruned() const;

    /// Formal degree of every entry, indexed by entry + 1.
    std::vector<long> degree_bounds() const;
    long degree_bound() const { return degree_bounds()[static_cast<std::size_t>(output_ + 1)]; }

    /// One "Ci = j op k" line per instruction.
    std::string to_text() const;
    /// Inverse of to_text; references may be written "3" or "C3", blank
    /// lines and '#' comments are ignored. A '-' operator needs surrounding
    /// spaces since "-1" is also a reference. Throws InputError.
    static Slp parse(std::string_view text);

    friend bool operator==(const Slp&, const Slp&) = default;

private:
    void check_ref(long ref) const;

    std::vector<Instruction> code_;
    long output_ = kX;
};

/// A value with its derivative with respect to x1.
template <class T>
struct Dual {
    T value;
    T derivative;
};

/// Multiplicative identity matching the ring and precision of `x`.
template <class T>
T one_like(const T& x);

template <>
inline Rational one_like(const Rational&) { return 1; }
template <>
inline numeric::RationalInterval one_like(const numeric::RationalInterval&) { return Rational(1); }
template <>
inline numeric::PAdic one_like(const numeric::PAdic& x) {
    return numeric::PAdic::from_integer(1, {x.prime(), std::max(1L, x.absolute_precision())});
}
template <>
inline numeric::Series one_like(const numeric::Series& x) {
    return numeric::Series::from_integer(1, {x.prime(), std::max(1L, x.absolute_precision())});
}
template <>
inline numeric::RationalPolynomial one_like(const numeric::RationalPolynomial&) {
    return numeric::RationalPolynomial::constant(1);
}

/// Values (and, if asked, derivatives) of every entry, indexed by entry + 1.
template <class T>
std::vector<Dual<T>> slp_trace(const Slp& prog, const T& x, bool with_derivative = true) {
    const T one = one_like(x);
    const T zero = one - one;
    std::vector<Dual<T>> v;
    v.reserve(prog.length() + 2);
    v.push_back({one, zero});
    v.push_back({x, with_derivative ? one : zero});
    for (const auto& ins : prog.code()) {
        const auto& a = v[static_cast<std::size_t>(ins.lhs + 1)];
        const auto& b = v[static_cast<std::size_t>(ins.rhs + 1)];
        switch (ins.op) {
            case Op::Add:
                v.push_back({a.value + b.value, with_derivative ? a.derivative + b.derivative : zero});
                break;
            case Op::Sub:
                v.push_back({a.value - b.value, with_derivative ? a.derivative - b.derivative : zero});
                break;
            case Op::Mul:
                v.push_back({a.value * b.value,
                             with_derivative ? a.derivative * b.value + a.value * b.derivative : zero});
                break;
        }
    }
    return v;
}

/// Value of the program's output at x (derivative zero unless requested).
template <class T>
Dual<T> slp_eval(const Slp& prog, const T& x, bool with_derivative = true) {
    auto v = slp_trace(prog, x, with_derivative);
    return v[static_cast<std::size_t>(prog.output() + 1)];
}

/// Dense expansion of the output. Refuses (GuardrailError) when the formal
/// degree exceeds `max_degree`.
numeric::RationalPolynomial expand(const Slp& prog, long max_degree = 1024);

}  // namespace fewnomial::slp
