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

#include "fewnomial/slp/extended_interval.hpp"
#include "fewnomial/slp/families.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fewnomial::slp {

/// A Z_p root of h_{n,k}: the true root agrees with `approx` modulo
/// p^radius. Roots 0 and 1 are exact and carry radius kExact.
struct CertifiedRoot {
    static constexpr long kExact = 1L << 40;
    numeric::PAdic approx;
    long radius = kExact;
    std::size_t level = 1;  // first m with h_{m,k}(root) = 0
    long derivative_valuation = 0;  // of the true h'_{n,k} at the root
};

/// Per-level summary of the induction from h_{m,k} to h_{m+1,k}.
struct LevelCheck {
    std::size_t m = 0;
    long roots = 0;                 // roots of h_{m,k}
    long distinct_modulus = 0;      // 3^(m-1)
    bool distinct = false;          // pairwise distinct mod p^(3^(m-1))
    long expected_derivative_valuation = 0;
    bool derivative_valuations = false;
};

struct SlpRootReport {
    std::size_t n = 0;
    std::size_t k = 0;
    unsigned long p = 0;
    long precision = 0;
    std::vector<CertifiedRoot> roots;  // of h_{n,k}
    std::vector<LevelCheck> levels;    // m = 1..n
    bool hensel = true;                // every lift met ord f > 2 ord f'
    bool nested = true;                // roots of h_m pass Hensel for h_{m+1}
    bool quotient_nonzero_at_0_and_1 = false;
    long quotient_degree_bound = 0;
    long quotient_roots = 0;
    long expected = 0;  // 2^n - 2
    std::string failure;

    bool certified() const;
};

/// Counts the Z_p roots of h_{n,k}/(x(1-x)) by running the induction
/// through the program: roots of c^(3^(m-1)) - h_{m,k} are Newton-lifted
/// from those of h_{m,k}, every lift is certified with Hensel's criterion
/// and every value comes from derivative propagation. `precision` is the
/// number of p-adic digits (0 picks 2*3^(n-1) + 16, clipped to the
/// ceiling but never below 3^(n-1) + 1); on a PrecisionError
/// it doubles up to `ceiling` and then throws Undecided.
SlpRootReport count_slp_roots_padic(const HnkFamily& fam, unsigned long p, long precision = 0,
                                    long ceiling = 1L << 14, int jobs = 0);

/// Evidence that h_{n,k}/(x(1-x)) has no real root.
struct RealRootCertificate {
    std::size_t n = 0;
    std::size_t k = 0;
    // Exact maxima of h_{m,k} over R, m = 1..n, through the monotone chain
    // M_1 = 1/4, M_{m+1} = (c^(3^(m-1)) - M_m) M_m, valid while
    // 2 M_m < c^(3^(m-1)).
    std::vector<Rational> maxima;
    bool chain = false;
    std::optional<Rational> h2_maximum;
    bool h2_within_three_eighths = false;
    // Enclosures of the quotient over (-inf,0], [0,1] and [1,inf) (the last
    // possibly split); certified when none contains 0.
    std::vector<std::pair<ExtendedInterval, ExtendedInterval>> pieces;
    bool interval = false;
    std::optional<long> sturm_real_roots;  // quotient expanded, n <= 4
    bool simple_roots_0_and_1 = false;
    std::string method;

    bool certified() const;
};

RealRootCertificate certify_no_real_roots(const HnkFamily& fam);

}  // namespace fewnomial::slp
