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

#include "fewnomial/extremal/lemma_tri.hpp"

#include "fewnomial/error.hpp"

#include <map>

namespace fewnomial::extremal {

using polyhedra::Integer;
using polyhedra::Point;
using polyhedra::Rational;
using polyhedra::Support;

std::vector<LiftedSupport> lemma_triangles(std::size_t n) {
    if (n < 2) throw InputError("the triangle configuration needs n >= 2");
    std::vector<LiftedSupport> out;
    for (std::size_t i = 1; i <= n; ++i) {
        Point origin(n, 0), two(n, 0), third(n, 0);
        two[0] = 2;
        if (i < n) {
            third[i - 1] = 1;
            third[i] = 1;
        } else {
            third[n - 1] = 1;
        }
        std::vector<Rational> h = i == 1 ? std::vector<Rational>{1, 0, 0}
                                         : std::vector<Rational>{0, Rational(long(2 * i - 3)), 0};
        out.emplace_back(Support(n, {origin, two, third}), std::move(h));
    }
    return out;
}

IntegerVector lemma_normal(std::size_t n, std::size_t j) {
    IntegerVector v(n + 1, 0);
    v[0] = 1;
    v[n] = 1;
    for (std::size_t i = 1; i <= j; ++i) v[i - 1] -= static_cast<long>(j + 1 - i);
    return v;
}

bool LemmaTriCertificate::certified() const { return failures().empty(); }

std::vector<std::string> LemmaTriCertificate::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.name);
    return out;
}

LemmaTriCertificate lemma_tri_certificate(std::size_t n) {
    LemmaTriCertificate cert;
    cert.n = n;
    const auto tri = lemma_triangles(n);
    const auto facets = polyhedra::lower_facets(tri);
    cert.lower_facet_count = facets.size();

    std::map<IntegerVector, LowerFacet> mixed;
    for (const auto& f : facets)
        if (f.is_mixed) mixed.emplace(f.normal, f);
    cert.checks.push_back({"mixed facet count", mixed.size() == n + 1,
                           std::to_string(mixed.size()) + " mixed lower facets, expected " + std::to_string(n + 1)});

    bool normals_ok = true, faces_ok = true, volumes_ok = true;
    std::string normal_detail, face_detail, volume_detail;
    for (std::size_t j = 0; j <= n; ++j) {
        const auto v = lemma_normal(n, j);
        auto it = mixed.find(v);
        if (it == mixed.end()) {
            normals_ok = false;
            normal_detail += "v_" + std::to_string(j) + " missing; ";
            continue;
        }
        const LowerFacet& f = it->second;
        cert.mixed_facets.push_back(f);
        for (std::size_t i = 1; i <= n; ++i) {
            // E_{i,1} = {beta, gamma} for i <= j, E_{i,0} = {alpha, gamma} otherwise.
            const std::vector<std::size_t> expected = i <= j ? std::vector<std::size_t>{1, 2}
                                                             : std::vector<std::size_t>{0, 2};
            if (f.faces[i - 1] != expected) {
                faces_ok = false;
                face_detail += "P_" + std::to_string(j) + " summand " + std::to_string(i) + "; ";
            }
        }
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& face : f.faces) edges.emplace_back(face.front(), face.back());
        const Integer vol = polyhedra::edge_volume(tri, edges);
        cert.volumes.push_back(vol);
        cert.mixed_volume += vol;
        if (vol != 1) {
            volumes_ok = false;
            volume_detail += "P_" + std::to_string(j) + " has volume " + vol.get_str() + "; ";
        }
    }
    if (mixed.size() != n + 1) normals_ok = false;
    cert.checks.push_back({"normals equal v_j", normals_ok, normal_detail});
    cert.checks.push_back({"face pattern", faces_ok, face_detail});
    cert.checks.push_back({"unit volumes", volumes_ok, volume_detail});
    cert.checks.push_back({"mixed volume n+1", cert.mixed_volume == long(n + 1),
                           "mixed volume " + cert.mixed_volume.get_str()});

    // Pairings of every v_j with the lifted vertices, and the closed forms.
    bool table_ok = true;
    std::string table_detail;
    for (std::size_t j = 0; j <= n; ++j) {
        const auto v = lemma_normal(n, j);
        std::vector<std::array<Integer, 3>> row;
        for (std::size_t i = 0; i < n; ++i) {
            std::array<Integer, 3> vals;
            for (std::size_t k = 0; k < 3; ++k) {
                Rational s = tri[i].lifting[k] * v[n];
                for (std::size_t c = 0; c < n; ++c) s += Rational(v[c]) * tri[i].base[k][c];
                vals[k] = s.get_num();
            }
            row.push_back(vals);
        }
        cert.pairings.push_back(std::move(row));
    }
    auto expect = [&](std::size_t j, std::size_t i, long a, long b, long c) {
        const auto& got = cert.pairings[j][i - 1];
        if (got[0] != a || got[1] != b || got[2] != c) {
            table_ok = false;
            table_detail += "(j=" + std::to_string(j) + ", i=" + std::to_string(i) + "); ";
        }
    };
    expect(0, 1, 1, 2, 1);
    for (std::size_t j = 1; j <= n; ++j) expect(j, 1, 1, 2 - 2 * long(j), 2 - 2 * long(j));
    for (std::size_t i = 2; i <= n; ++i) {
        expect(0, i, 0, 2 * long(i) - 1, 0);
        expect(1, i, 0, 2 * long(i) - 3, 0);
    }
    cert.checks.push_back({"pairing table", table_ok, table_detail});
    return cert;
}

}  // namespace fewnomial::extremal
