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

#include "fewnomial/extremal/block.hpp"

#include "fewnomial/numeric/sturm.hpp"

namespace fewnomial::extremal {

BlockShape block_shape(std::size_t n, std::size_t k) {
    if (k < 2) throw InputError("block construction needs k >= 2");
    if (n <= k - 1) throw InputError("block construction needs n > k - 1");
    BlockShape s{n, k, n / (k - 1), 0};
    s.m = n - (k - 1) * s.ell;
    return s;
}

namespace {

// Phase-1 roots of (x - 1)(x - eps).
template <class T>
VerificationReport univariate_base(const numeric::FieldSpec& field, const std::string& eps_text,
                                   const numeric::PrecisionPolicy& policy) {
    VerificationReport rep;
    rep.n = 1;
    rep.field = field.name();
    rep.epsilon = eps_text;
    rep.target = 2;
    rep.methods = {"Newton polygon", "Hensel lifting"};
    try {
        rep.certified = numeric::with_precision_doubling(policy, [&](long precision) {
            const typename T::Context ctx{field.p, precision};
            const auto base = block_base<T>(1, parse_element<T>(eps_text, ctx), ctx);
            std::vector<T> c(3, T::from_integer(0, ctx));
            for (const auto& t : base.polys[0].terms) c[static_cast<std::size_t>(t.exp[0])] = t.coeff;
            rep.precision = precision;
            return static_cast<long>(numeric::find_roots(numeric::Polynomial<T>(c), {true, policy.depth_bound}).size());
        });
        rep.found = rep.certified;
        rep.status = rep.certified == 2 ? Status::Certified : Status::Refuted;
    } catch (const Undecided& e) {
        rep.note = e.what();
    } catch (const PrecisionError& e) {
        rep.note = e.what();
    }
    return rep;
}

VerificationReport univariate_base_real(const std::string& eps_text) {
    VerificationReport rep;
    rep.n = 1;
    rep.field = "R";
    rep.epsilon = eps_text;
    rep.target = 2;
    rep.methods = {"Sturm count on (0, inf)"};
    const Rational eps = numeric::parse_rational(eps_text);
    const numeric::RationalPolynomial f({eps, -(1 + eps), Rational(1)});
    rep.certified = numeric::sturm_count(f, numeric::Bound::at(0), numeric::Bound::pos_inf());
    rep.found = rep.certified;
    rep.status = rep.certified == 2 ? Status::Certified : Status::Refuted;
    return rep;
}

}  // namespace

BlockReport certify_block_system(std::size_t n, std::size_t k, const numeric::FieldSpec& field,
                                 const std::string& eps, const numeric::PrecisionPolicy& policy) {
    field.validate();
    BlockReport rep;
    rep.shape = block_shape(n, k);
    long expected = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) expected *= static_cast<long>((n + k - 1) / (k - 1));
    rep.expected = expected;
    // Union support of the assembled system, counted on the exponent data.
    if (field.kind == numeric::FieldKind::Real) {
        rep.support_size = gen_block_system<Rational>(n, k, numeric::parse_rational(eps)).union_support().size();
        rep.base = rep.shape.ell >= 2 ? verify_family_real(rep.shape.ell, numeric::parse_rational(eps))
                                      : univariate_base_real(eps);
    } else if (field.kind == numeric::FieldKind::PAdic) {
        const PAdic::Context ctx{field.p, policy.initial};
        rep.support_size = gen_block_system<PAdic>(n, k, parse_element<PAdic>(eps, ctx), ctx).union_support().size();
        rep.base = rep.shape.ell >= 2 ? verify_family_local(rep.shape.ell, field, eps, policy)
                                      : univariate_base<PAdic>(field, eps, policy);
    } else {
        const Series::Context ctx{field.p, policy.initial};
        rep.support_size = gen_block_system<Series>(n, k, parse_element<Series>(eps, ctx), ctx).union_support().size();
        rep.base = rep.shape.ell >= 2 ? verify_family_local(rep.shape.ell, field, eps, policy)
                                      : univariate_base<Series>(field, eps, policy);
    }
    rep.base_count = rep.base.certified;
    rep.certified = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) rep.certified *= rep.base_count;
    if (rep.base.status == Status::Undecided)
        rep.status = Status::Undecided;
    else if (rep.base.status == Status::Certified && rep.certified == rep.expected && rep.support_size <= n + k)
        rep.status = Status::Certified;
    else
        rep.status = Status::Refuted;
    return rep;
}

}  // namespace fewnomial::extremal
