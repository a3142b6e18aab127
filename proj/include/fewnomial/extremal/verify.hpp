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

#include "fewnomial/extremal/system.hpp"
#include "fewnomial/numeric/univariate_roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fewnomial::extremal {

enum class Status { Certified, Refuted, Undecided };
std::string to_string(Status s);

/// One root of the family. Over R: an isolating interval for u = zeta_1^2
/// and enclosures of every coordinate, phases are signs. Over local fields:
/// u and the coordinates as literals with their valuations and phases.
struct RootReport {
    std::optional<RationalInterval> u_interval;
    std::vector<RationalInterval> coordinate_intervals;
    std::string u_literal;
    std::vector<std::string> coordinates;
    std::vector<long> valuations;
    std::vector<long> phases;
    bool all_phase_one = false;
};

struct VerificationReport {
    std::size_t n = 0;
    std::string field;
    std::string epsilon;
    long target = 0;      // n + 1
    long certified = 0;   // roots with every coordinate of phase 1
    long found = 0;       // all roots located in the field
    Status status = Status::Undecided;
    std::vector<std::string> methods;
    std::vector<RootReport> roots;
    long precision = 0;   // digits used (local fields only)
    std::string note;
};

/// Sturm count of R_n on (0, inf) plus interval back-substitution.
VerificationReport verify_family_real(std::size_t n, const Rational& eps);

/// Newton polygon + Hensel on R_n, then back-substitution in the field.
/// eps is a literal ("p", "t", "p^3*2", ...) re-read at each precision.
VerificationReport verify_family_local(std::size_t n, const numeric::FieldSpec& field, const std::string& eps,
                                       const numeric::PrecisionPolicy& policy = {});

/// Dispatch on the field kind.
VerificationReport verify_family(std::size_t n, const numeric::FieldSpec& field, const std::string& eps,
                                 const numeric::PrecisionPolicy& policy = {});

/// Smallest k in [1, max_k] for which eps = rho^k (or 2^-k over R) yields
/// n+1 certified roots, with the outcome of every tested k.
struct SweepResult {
    std::optional<long> smallest;
    std::vector<std::pair<long, long>> counts;  // (k, certified count)
};
SweepResult sweep_epsilon(std::size_t n, const numeric::FieldSpec& field, long max_k,
                          const numeric::PrecisionPolicy& policy = {});

}  // namespace fewnomial::extremal
