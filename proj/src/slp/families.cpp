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

#include "fewnomial/slp/families.hpp"

#include <gmp.h>

namespace fewnomial::slp {

LogisticFamily gen_logistic(std::size_t n) {
    if (n < 1) throw InputError("the logistic family starts at n = 1");
    if (n > 62) throw GuardrailError("logistic degree 2^n overflows at n > 62");
    LogisticFamily fam;
    fam.n = n;
    auto& p = fam.program;
    const long two = p.add(Slp::kOne, Slp::kOne);
    const long four = p.add(two, two);
    long h = Slp::kX;
    for (std::size_t m = 1; m <= n; ++m) {
        const long one_minus = p.sub(Slp::kOne, h);
        h = p.mul(four, p.mul(h, one_minus));
        fam.h.push_back(h);
    }
    p.sub(h, Slp::kX);
    return fam;
}

std::vector<unsigned long> first_primes(std::size_t k) {
    std::vector<unsigned long> out;
    mpz_class q = 1;
    while (out.size() < k) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        out.push_back(q.get_ui());
    }
    return out;
}

HnkFamily gen_hnk(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1) throw InputError("h_{n,k} needs n, k >= 1");
    if (n > 40) throw GuardrailError("h_{n,k} degree 2^n is unreasonably large for n > 40");
    HnkFamily fam;
    fam.n = n;
    fam.k = k;
    fam.primes = first_primes(k);
    fam.c = 1;
    auto& p = fam.program;

    long c = Slp::kOne;
    for (auto q : fam.primes) {
        fam.c *= q;
        const long entry = p.integer(q);
        c = c == Slp::kOne ? entry : p.mul(c, entry);
    }
    fam.c_entry = c;

    const long one_minus = p.sub(Slp::kOne, Slp::kX);
    long h = p.mul(Slp::kX, one_minus);
    fam.h.push_back(h);
    long power = c;
    long quotient = Slp::kOne;
    for (std::size_t m = 1; m < n; ++m) {
        if (m > 1) power = p.mul(p.mul(power, power), power);
        const long f = p.sub(power, h);
        fam.power.push_back(power);
        fam.factor.push_back(f);
        quotient = quotient == Slp::kOne ? f : p.mul(f, quotient);
        h = p.mul(f, h);
        fam.h.push_back(h);
    }
    p.set_output(quotient);
    return fam;
}

Slp HnkFamily::h_program(std::size_t m) const {
    if (m < 1 || m > n) throw InputError("h_{m,k} index out of range");
    Slp out = program;
    out.set_output(h[m - 1]);
    return out;
}

}  // namespace fewnomial::slp
