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

#include "fewnomial/slp/slp.hpp"

#include <vector>

namespace fewnomial::slp {

/// Logistic iterates h_1 = 4x(1-x), h_{m+1} = 4h_m(1-h_m). The program
/// outputs h_n - x1; `h[m-1]` is the entry holding h_m.
struct LogisticFamily {
    std::size_t n = 0;
    Slp program;
    std::vector<long> h;
};

LogisticFamily gen_logistic(std::size_t n);

/// First k primes, in order.
std::vector<unsigned long> first_primes(std::size_t k);

/// h_{1,k} = x(1-x), h_{m+1,k} = (c^(3^(m-1)) - h_{m,k}) h_{m,k} with c the
/// product of the first k primes. The program outputs the quotient
/// h_{n,k} / (x(1-x)) = prod_{m<n} (c^(3^(m-1)) - h_{m,k}); the entries of
/// the recurrence are recorded so callers can read h_m, its power and the
/// factor off one trace. All vectors are indexed by m-1.
struct HnkFamily {
    std::size_t n = 0;
    std::size_t k = 0;
    Integer c;
    std::vector<unsigned long> primes;
    Slp program;
    long c_entry = 0;
    std::vector<long> h;       // h_{m,k}, m = 1..n
    std::vector<long> power;   // c^(3^(m-1)), m = 1..n-1
    std::vector<long> factor;  // c^(3^(m-1)) - h_{m,k}, m = 1..n-1

    /// Degree of the quotient, 2^n - 2.
    long quotient_degree() const { return (1L << n) - 2; }
    /// Program whose output is h_{n,k} itself (same instructions).
    Slp h_program(std::size_t m) const;
};

HnkFamily gen_hnk(std::size_t n, std::size_t k);

}  // namespace fewnomial::slp
