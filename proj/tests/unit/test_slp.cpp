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

#include "doctest.h"

#include "fewnomial/numeric/sturm.hpp"
#include "fewnomial/slp/certify.hpp"

#include <random>

using namespace fewnomial;
using namespace fewnomial::slp;
using numeric::Bound;
using numeric::PAdic;
using numeric::RationalInterval;
using numeric::RationalPolynomial;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("basic programs") {
    Slp p;
    p.mul(Slp::kX, p.sub(Slp::kOne, Slp::kX));
    auto v = slp_eval(p, Rational(3));
    CHECK(v.value == -6);
    CHECK(v.derivative == -5);
    CHECK(p.length() == 2);

    Slp id;
    CHECK(id.length() == 0);
    CHECK(slp_eval(id, Rational(7)).value == 7);
    CHECK(slp_eval(id, Rational(7)).derivative == 1);
    CHECK(id.degree_bound() == 1);

    for (unsigned i = 1; i <= 64; ++i) {
        Slp q;
        const Integer two_i = numeric::ipow(2, i);
        q.integer(two_i);
        CHECK(slp_eval(q, Rational(0), false).value == Rational(two_i));
        CHECK(q.length() <= i + 1);
    }
    Slp q;
    const long x3 = q.power(Slp::kX, 13);
    CHECK(slp_eval(q, Rational(2)).value == 8192);
    CHECK(slp_eval(q, Rational(2)).derivative == 13 * 4096);
    CHECK(x3 == q.output());
    CHECK(q.length() <= 6);
    CHECK_THROWS_AS(q.mul(99, 0), InputError);
    CHECK_THROWS_AS(q.integer(0), InputError);
}

TEST_CASE("text format round trip") {
    auto fam = gen_hnk(3, 2);
    const auto text = fam.program.pruned().to_text();
    CHECK(Slp::parse(text) == fam.program.pruned());
    auto p = Slp::parse("# x^2 - 1\nC1 = 0 * 0\n\nC2 = C1 - -1\n");
    CHECK(p.length() == 2);
    CHECK(slp_eval(p, Rational(5)).value == 24);
    CHECK(p.to_text() == "C1 = 0 * 0\nC2 = 1 - -1\n");
    CHECK_THROWS_AS(Slp::parse("C2 = 0 * 0\n"), InputError);
    CHECK_THROWS_AS(Slp::parse("C1 = 0 / 0\n"), InputError);
    CHECK_THROWS_AS(Slp::parse("C1 = 0 * 1\n"), InputError);
    CHECK_THROWS_AS(Slp::parse("C1 = 0 *\n"), InputError);
    CHECK_THROWS_AS(Slp::parse("C1 0 * 0\n"), InputError);
}

TEST_CASE("pruning keeps the value") {
    auto fam = gen_hnk(4, 2);
    const auto pr = fam.program.pruned();
    CHECK(pr.length() < fam.program.length());
    for (int x = -3; x <= 3; ++x)
        CHECK(slp_eval(pr, Rational(x)).value == slp_eval(fam.program, Rational(x)).value);
}

TEST_CASE("propagated derivatives equal symbolic ones") {
    std::mt19937 rng(7);
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<Slp> progs{gen_logistic(n).program, gen_hnk(n, 1).program, gen_hnk(n, 2).program,
                               gen_hnk(n, 3).h_program(n)};
        for (const auto& prog : progs) {
            const auto f = expand(prog);
            const auto df = f.derivative();
            for (int trial = 0; trial < 10; ++trial) {
                const Rational x = random_rational(rng);
                const auto v = slp_eval(prog, x);
                CHECK(v.value == f.eval(x));
                CHECK(v.derivative == (df.is_zero() ? Rational(0) : df.eval(x)));
            }
        }
    }
}

TEST_CASE("evaluation agrees across domains") {
    std::mt19937 rng(11);
    const auto prog = gen_hnk(3, 2).program;
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<long> d(-50, 50);
        const Rational x(d(rng));
        const auto exact = slp_eval(prog, x);
        const numeric::PAdicContext ctx{3, 80};
        const auto local = slp_eval(prog, PAdic::from_rational(x, ctx));
        CHECK(local.value == PAdic::from_rational(exact.value, ctx).lifted(local.value.absolute_precision()));
        const auto iv = slp_eval(prog, RationalInterval(x));
        CHECK(iv.value.lo() == exact.value);
        CHECK(iv.value.hi() == exact.value);
        const auto ext = slp_eval(prog, ExtendedInterval(x), false);
        CHECK(ext.value.lo().value == exact.value);
        const auto s = slp_eval(prog, numeric::Series::from_rational(x, {3, 40}));
        CHECK(s.value == numeric::Series::from_rational(exact.value, {3, 40}).lifted(s.value.absolute_precision()));
    }
    // An interval enclosure contains the value at every point of the box.
    const auto box = slp_eval(prog, RationalInterval(Rational(-1, 3), Rational(1, 2))).value;
    for (int i = 0; i <= 12; ++i) {
        const Rational x = Rational(-1, 3) + Rational(i, 12) * Rational(5, 6);
        CHECK(box.contains(slp_eval(prog, x, false).value));
    }
}

TEST_CASE("extended intervals") {
    auto neg = ExtendedInterval::at_most(0);
    auto one = ExtendedInterval(Rational(1));
    auto r = neg * (one - neg);  // x (1 - x) on (-inf, 0]
    CHECK(r.hi() == ExtendedRational{0, 0});
    CHECK(r.lo() == ExtendedRational::neg_inf());
    auto pos = ExtendedInterval::at_least(2);
    CHECK((pos * pos).lo().value == 4);
    CHECK_FALSE((pos * pos).contains_zero());
    CHECK((pos - pos).contains_zero());
    CHECK((ExtendedInterval(Rational(3)) * ExtendedInterval(Rational(0))).hi().value == 0);
}

TEST_CASE("logistic family") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto fam = gen_logistic(n);
        CHECK(fam.program.length() <= 5 * n + 5);
        const auto f = expand(fam.program);
        CHECK(f.degree() == (1L << n));
        CHECK(fam.program.degree_bound() == (1L << n));
        // x = 0 is a fixed point of every iterate, so it is a root; all the
        // others lie strictly inside (0, 1).
        CHECK(f[0] == 0);
        CHECK(numeric::sturm_count(f, Bound::neg_inf(), Bound::pos_inf()) == (1L << n));
        CHECK(numeric::sturm_count(f, Bound::at(0), Bound::at(1)) == (1L << n) - 1);
        CHECK(f.eval(Rational(1)) != 0);
    }
    CHECK_THROWS_AS(gen_logistic(0), InputError);
}

TEST_CASE("h_{n,k} construction") {
    CHECK(gen_hnk(2, 2).c == 6);
    CHECK(gen_hnk(2, 3).c == 30);
    CHECK(first_primes(5) == std::vector<unsigned long>{2, 3, 5, 7, 11});
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto fam = gen_hnk(n, k);
            const auto q = expand(fam.program);
            CHECK(q.degree() == (1L << n) - 2);
            CHECK(fam.program.degree_bound() == fam.quotient_degree());
            // quotient * x(1-x) = h_{n,k}
            const auto x = RationalPolynomial::linear(1, 0);
            const auto base = x * (RationalPolynomial::constant(1) - x);
            CHECK((q * base).coefficients() == expand(fam.h_program(n)).coefficients());
            for (const auto& c : q.coefficients()) CHECK(c.get_den() == 1);
        }
    // Witness length grows linearly in n once c is built.
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto a = gen_hnk(6, k).program.pruned().length();
        const auto b = gen_hnk(12, k).program.pruned().length();
        CHECK(b - a == 6 * 5);
    }
}

TEST_CASE("derivative recurrence") {
    std::mt19937 rng(3);
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto fam = gen_hnk(n, 2);
        for (int trial = 0; trial < 20; ++trial) {
            const Rational x = random_rational(rng);
            const auto t = slp_trace(fam.program, x);
            const std::size_t m = n - 1;
            const auto& h = t[static_cast<std::size_t>(fam.h[m - 1] + 1)];
            const auto& next = t[static_cast<std::size_t>(fam.h[m] + 1)];
            const auto& power = t[static_cast<std::size_t>(fam.power[m - 1] + 1)].value;
            // Product rule: h'_{m+1} = (P - 2 h_m) h'_m.
            CHECK(next.derivative == (power - 2 * h.value) * h.derivative);
            // Dropping the h_m h'_m term is wrong wherever it is nonzero.
            if (h.value * h.derivative != 0) CHECK(next.derivative != (power - h.value) * h.derivative);
        }
    }
}

TEST_CASE("p-adic root counts") {
    const auto fam = gen_hnk(3, 1);
    const auto rep = count_slp_roots_padic(fam, 2);
    CHECK(rep.certified());
    CHECK(rep.quotient_roots == 6);
    CHECK(rep.roots.size() == 8);
    for (const auto& r : rep.roots) CHECK(r.derivative_valuation == 4);
    CHECK(rep.levels.back().distinct_modulus == 9);
    CHECK(rep.levels.back().distinct);

    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto f = gen_hnk(n, k);
            for (auto p : f.primes) {
                const auto r = count_slp_roots_padic(f, p);
                CHECK_MESSAGE(r.certified(), "n=" << n << " k=" << k << " p=" << p);
                CHECK(r.quotient_roots == (1L << n) - 2);
            }
        }
    CHECK_THROWS_AS(count_slp_roots_padic(gen_hnk(3, 2), 5), InputError);
    CHECK_THROWS_AS(count_slp_roots_padic(gen_hnk(3, 1), 2, 5), InputError);
}

TEST_CASE("root sets are nested") {
    for (unsigned long p : {2ul, 3ul}) {
        const auto small = count_slp_roots_padic(gen_hnk(3, 2), p);
        const auto big = count_slp_roots_padic(gen_hnk(4, 2), p);
        for (const auto& r : small.roots) {
            bool found = false;
            for (const auto& s : big.roots) {
                const auto d = r.approx - s.approx;
                const long radius = std::min(r.radius, s.radius);
                if (d.is_zero() || d.valuation() >= std::min(radius, 27L)) found = true;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("no real roots") {
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto fam = gen_hnk(n, k);
            const auto cert = certify_no_real_roots(fam);
            CHECK_MESSAGE(cert.certified(), "n=" << n << " k=" << k);
            CHECK(cert.method == (n <= 4 ? "sturm" : "interval"));
            if (n >= 2) {
                // The top of h_2 is (c - 1/4)/4, attained at x = 1/2.
                CHECK(*cert.h2_maximum == Rational(fam.c) / 4 - Rational(1, 16));
                CHECK(slp_eval(fam.h_program(2), Rational(1, 2)).value == *cert.h2_maximum);
                CHECK_FALSE(cert.h2_within_three_eighths);
            }
        }
    CHECK(certify_no_real_roots(gen_hnk(2, 1)).maxima[1] == Rational(7, 16));
}
