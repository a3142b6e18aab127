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

#include "fewnomial/numeric/local_field.hpp"

namespace fewnomial::numeric {

static_assert(NonArchimedean<PAdic>);
static_assert(NonArchimedean<Series>);

void FieldSpec::validate() const {
    if (kind == FieldKind::Real) return;
    if (!is_prime(p)) throw InputError("field prime must be prime, got " + std::to_string(p));
    if (precision <= 0) throw InputError("precision must be positive");
}

std::string FieldSpec::name() const {
    switch (kind) {
        case FieldKind::Real: return "R";
        case FieldKind::PAdic: return "Qp";
        case FieldKind::Series: return "Fpt";
    }
    return "R";
}

FieldKind parse_field_kind(const std::string& name) {
    if (name == "R") return FieldKind::Real;
    if (name == "Qp") return FieldKind::PAdic;
    if (name == "Fpt") return FieldKind::Series;
    throw InputError("unknown field '" + name + "' (expected R, Qp or Fpt)");
}

ValuationPhase valuation_and_phase(const Rational& x) {
    ValuationPhase r;
    if (x == 0) {
        r.is_zero = true;
        return r;
    }
    r.absolute_value = abs(x);
    r.phase = sgn(x) > 0 ? 1 : -1;
    return r;
}

namespace {

template <class T>
ValuationPhase non_archimedean(const T& x) {
    ValuationPhase r;
    if (x.is_zero()) {
        r.is_zero = true;
        r.ord = x.absolute_precision();
        return r;
    }
    r.ord = x.valuation();
    r.phase = static_cast<long>(x.residue());
    return r;
}

}  // namespace

ValuationPhase valuation_and_phase(const PAdic& x) { return non_archimedean(x); }
ValuationPhase valuation_and_phase(const Series& x) { return non_archimedean(x); }

}  // namespace fewnomial::numeric
