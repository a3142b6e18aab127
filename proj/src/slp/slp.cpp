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

#include "fewnomial/slp/slp.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fewnomial::slp {

char op_symbol(Op op) {
    switch (op) {
        case Op::Add: return '+';
        case Op::Sub: return '-';
        case Op::Mul: return '*';
    }
    return '?';
}

void Slp::check_ref(long ref) const {
    if (ref < kOne || ref > static_cast<long>(code_.size()))
        throw InputError("instruction reference " + std::to_string(ref) + " is not an earlier entry");
}

long Slp::emit(Op op, long lhs, long rhs) {
    check_ref(lhs);
    check_ref(rhs);
    code_.push_back({op, lhs, rhs});
    output_ = static_cast<long>(code_.size());
    return output_;
}

void Slp::set_output(long index) {
    check_ref(index);
    output_ = index;
}

long Slp::integer(const Integer& m) {
    if (m <= 0) throw InputError("integer constants must be positive");
    const std::string bits = m.get_str(2);
    long acc = kOne;
    if (bits.size() == 1) {
        // 1 itself needs an instruction only if it must be a fresh entry.
        return kOne;
    }
    for (std::size_t i = 1; i < bits.size(); ++i) {
        acc = add(acc, acc);
        if (bits[i] == '1') acc = add(acc, kOne);
    }
    return acc;
}

long Slp::power(long a, unsigned long e) {
    if (e == 0) return kOne;
    long result = -2;  // not yet set
    long base = a;
    while (true) {
        if (e & 1UL) result = result == -2 ? base : mul(result, base);
        e >>= 1;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

Slp Slp::pruned() const {
    std::vector<bool> live(code_.size() + 1, false);
    if (output_ >= 1) live[static_cast<std::size_t>(output_)] = true;
    for (std::size_t i = code_.size(); i >= 1; --i) {
        if (!live[i]) continue;
        for (long r : {code_[i - 1].lhs, code_[i - 1].rhs})
            if (r >= 1) live[static_cast<std::size_t>(r)] = true;
    }
    Slp out;
    std::vector<long> renumber(code_.size() + 1, 0);
    auto map = [&](long r) { return r >= 1 ? renumber[static_cast<std::size_t>(r)] : r; };
    for (std::size_t i = 1; i <= code_.size(); ++i) {
        if (!live[i]) continue;
        const auto& ins = code_[i - 1];
        renumber[i] = out.emit(ins.op, map(ins.lhs), map(ins.rhs));
    }
    out.output_ = map(output_);
    return out;
}

std::vector<long> Slp::degree_bounds() const {
    std::vector<long> d{0, 1};
    d.reserve(code_.size() + 2);
    for (const auto& ins : code_) {
        const long a = d[static_cast<std::size_t>(ins.lhs + 1)];
        const long b = d[static_cast<std::size_t>(ins.rhs + 1)];
        d.push_back(ins.op == Op::Mul ? a + b : std::max(a, b));
    }
    return d;
}

std::string Slp::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < code_.size(); ++i) {
        const auto& ins = code_[i];
        out << 'C' << (i + 1) << " = " << ins.lhs << ' ' << op_symbol(ins.op) << ' ' << ins.rhs << '\n';
    }
    return out.str();
}

namespace {

long parse_ref(std::istringstream& in, const std::string& line) {
    std::string tok;
    if (!(in >> tok)) throw InputError("missing operand in \"" + line + "\"");
    if (!tok.empty() && (tok[0] == 'C' || tok[0] == 'c')) tok.erase(0, 1);
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) throw InputError("bad operand \"" + tok + "\"");
        return v;
    } catch (const std::logic_error&) {
        throw InputError("bad operand \"" + tok + "\"");
    }
}

}  // namespace

Slp Slp::parse(std::string_view text) {
    Slp prog;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        // Put spaces around the operator so "3*2" and "3 * 2" both tokenize.
        std::string spaced;
        for (char c : line) {
            if (c == '+' || c == '*' || c == '=') {
                spaced += ' ';
                spaced += c;
                spaced += ' ';
            } else {
                spaced += c;
            }
        }
        std::istringstream in(spaced);
        std::string name, eq;
        in >> name >> eq;
        if (name.size() < 2 || (name[0] != 'C' && name[0] != 'c') || eq != "=")
            throw InputError("expected \"Ci = j op k\", got \"" + line + "\"");
        long index = 0;
        try {
            index = std::stol(name.substr(1));
        } catch (const std::logic_error&) {
            throw InputError("bad instruction name \"" + name + "\"");
        }
        if (index != static_cast<long>(prog.length()) + 1)
            throw InputError("instruction " + name + " out of order");
        const long lhs = parse_ref(in, line);
        std::string op;
        if (!(in >> op) || op.size() != 1) throw InputError("missing operator in \"" + line + "\"");
        const long rhs = parse_ref(in, line);
        std::string rest;
        if (in >> rest) throw InputError("trailing text in \"" + line + "\"");
        switch (op[0]) {
            case '+': prog.add(lhs, rhs); break;
            case '-': prog.sub(lhs, rhs); break;
            case '*': prog.mul(lhs, rhs); break;
            default: throw InputError("unknown operator \"" + op + "\"");
        }
    }
    return prog;
}

numeric::RationalPolynomial expand(const Slp& prog, long max_degree) {
    const long deg = prog.degree_bound();
    if (deg > max_degree)
        throw GuardrailError("refusing to expand a program of formal degree " + std::to_string(deg));
    return slp_eval(prog, numeric::RationalPolynomial::linear(1, 0), false).value;
}

}  // namespace fewnomial::slp
