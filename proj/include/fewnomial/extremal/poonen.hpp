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

#include "fewnomial/numeric/polynomial.hpp"
#include "fewnomial/numeric/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fewnomial::extremal {

/// Polynomial in t over F_p, low degree first, no trailing zeros.
using FpT = std::vector<std::uint64_t>;

/// Which digits the factors x - (z_1 + z_2 t + ...) range over.
///   Printed:       z_1, ..., z_{k-1} with z_i t^(i-1)  (p^(k-1) factors)
///   DigitShifted:  z_1, ..., z_k     with z_i t^(i-1)  (p^k factors)
enum class PoonenVariant { Printed, DigitShifted };
std::string to_string(PoonenVariant v);

/// Expanded product as a polynomial in x with coefficients in F_p[t].
std::vector<FpT> gen_poonen_rk(unsigned long p, unsigned k, PoonenVariant variant);

struct PoonenReport {
    unsigned long p = 0;
    unsigned k = 0;
    PoonenVariant variant = PoonenVariant::Printed;
    long degree = 0;
    long term_count = 0;       // nonzero x-coefficients
    unsigned search_digits = 0;
    long brute_force_phase1 = 0;  // phase-1 x in F_p[t] of degree < search_digits with r(x) = 0
    long library_phase1 = 0;      // Newton polygon + Hensel over F_p((t))
    long target = 0;              // (p^k - 1)/(p - 1)
};

/// Both counts for one variant. The brute force evaluates exactly in
/// F_p[t]; every factor root has fewer than search_digits digits.
PoonenReport poonen_report(unsigned long p, unsigned k, PoonenVariant variant);

}  // namespace fewnomial::extremal
