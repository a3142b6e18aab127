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

#include "fewnomial/extremal/verify.hpp"

namespace fewnomial::extremal {

/// Shape of the block system: m unit equations x_{0,j} - 1, then k-1
/// disjoint copies of an l x l base system supported on l+2 points.
struct BlockShape {
    std::size_t n = 0, k = 0, ell = 0, m = 0;
};

BlockShape block_shape(std::size_t n, std::size_t k);

/// Base system in l variables: the circuit family for l >= 2 and
/// (x - 1)(x - eps) for l = 1. Both have l+1 roots of phase 1.
template <class T>
SparseSystem<T> block_base(std::size_t ell, const T& eps, const typename FieldTraits<T>::Context& ctx = {}) {
    if (ell >= 2) return gen_G_eps<T>(ell, eps, ctx);
    using F = FieldTraits<T>;
    SparseSystem<T> s{1, {}};
    s.polys.push_back({1, {{{2}, F::from_int(1, ctx)}, {{1}, -(F::from_int(1, ctx) + eps)}, {{0}, eps}}});
    return s;
}

template <class T>
SparseSystem<T> gen_block_system(std::size_t n, std::size_t k, const T& eps,
                                 const typename FieldTraits<T>::Context& ctx = {}) {
    using F = FieldTraits<T>;
    const BlockShape shape = block_shape(n, k);
    const SparseSystem<T> base = block_base<T>(shape.ell, eps, ctx);
    SparseSystem<T> out{n, {}};
    for (std::size_t j = 0; j < shape.m; ++j) {
        Point e(n, 0);
        e[j] = 1;
        out.polys.push_back({n, {{e, F::from_int(1, ctx)}, {Point(n, 0), F::from_int(-1, ctx)}}});
    }
    for (std::size_t b = 0; b + 1 < k; ++b) {
        const std::size_t offset = shape.m + b * shape.ell;
        for (const auto& f : base.polys) {
            SparsePolynomial<T> g{n, {}};
            for (const auto& t : f.terms) {
                Point e(n, 0);
                for (std::size_t c = 0; c < shape.ell; ++c) e[offset + c] = t.exp[c];
                g.terms.push_back({e, t.coeff});
            }
            out.polys.push_back(std::move(g));
        }
    }
    return out;
}

struct BlockReport {
    BlockShape shape;
    std::size_t support_size = 0;
    long expected = 0;   // floor((n+k-1)/(k-1))^(k-1)
    long base_count = 0; // certified phase-1 roots of one block
    long certified = 0;  // base_count^(k-1); unit equations contribute 1 each
    Status status = Status::Undecided;
    VerificationReport base;
};

/// Certifies each distinct block once (the copies are identical and in
/// disjoint variables, so roots multiply) and checks the support bound.
BlockReport certify_block_system(std::size_t n, std::size_t k, const numeric::FieldSpec& field,
                                 const std::string& eps, const numeric::PrecisionPolicy& policy = {});

}  // namespace fewnomial::extremal
