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

#include "fewnomial/polyhedra/lower_hull.hpp"

#include "fewnomial/error.hpp"
#include "fewnomial/polyhedra/lp.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>

#include <omp.h>

namespace fewnomial::polyhedra {

namespace {

std::size_t common_dimension(const std::vector<LiftedSupport>& lifted) {
    if (lifted.empty()) throw InputError("no supports given");
    const std::size_t n = lifted.front().base.dim();
    for (const auto& s : lifted)
        if (s.base.dim() != n) throw DimensionError("supports live in different dimensions");
    return n;
}

void require_full_dimensional(const std::vector<LiftedSupport>& lifted, std::size_t n) {
    RationalMatrix diffs;
    for (const auto& s : lifted)
        for (std::size_t i = 1; i < s.size(); ++i) {
            RationalVector row;
            for (std::size_t c = 0; c < n; ++c) row.emplace_back(s.base[i][c] - s.base[0][c]);
            diffs.push_back(std::move(row));
        }
    if (rank(std::move(diffs), n) < n)
        throw DimensionError("the Minkowski sum of the supports is not full-dimensional");
}

RationalVector difference(const Point& a, const Point& b) {
    RationalVector d;
    for (std::size_t c = 0; c < a.size(); ++c) d.emplace_back(a[c] - b[c]);
    return d;
}

// Incremental row-echelon basis used to track the rank of equality rows.
class Echelon {
public:
    explicit Echelon(std::size_t columns) : cols_(columns) {}

    // Adds row when independent; reports whether it was.
    bool add(RationalVector row) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational f = row[pivots_[r]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c) row[c] -= f * rows_[r][c];
        }
        std::size_t p = 0;
        while (p < cols_ && row[p] == 0) ++p;
        if (p == cols_) return false;
        const Rational inv = 1 / row[p];
        for (auto& x : row) x *= inv;
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        return true;
    }
    bool independent(RationalVector row) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational f = row[pivots_[r]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c) row[c] -= f * rows_[r][c];
        }
        return std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    }
    std::size_t rank() const noexcept { return rows_.size(); }

private:
    std::size_t cols_;
    RationalMatrix rows_;
    std::vector<std::size_t> pivots_;
};

// Constraints on v saying that `face` is exactly the argmin set of
// (v, 1) over the lifted support.
void add_face_rows(LinearSystem& sys, const LiftedSupport& s, const std::vector<std::size_t>& face) {
    const std::size_t r = face.front();
    std::vector<bool> in(s.size(), false);
    for (auto i : face) in[i] = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == r) continue;
        RationalVector a = difference(s.base[i], s.base[r]);
        Rational b = s.lifting[r] - s.lifting[i];
        if (in[i]) sys.equal(std::move(a), std::move(b));
        else sys.greater(std::move(a), std::move(b));
    }
}

std::size_t face_dimension(const LiftedSupport& s, const std::vector<std::size_t>& face) {
    RationalMatrix m;
    for (std::size_t k = 1; k < face.size(); ++k) m.push_back(difference(s.base[face[k]], s.base[face[0]]));
    return m.empty() ? 0 : rank(std::move(m), s.base.dim());
}

// Argmin set of (v, 1) over a lifted support.
std::vector<std::size_t> argmin_face(const LiftedSupport& s, const RationalVector& v) {
    std::vector<std::size_t> face;
    Rational best;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Rational val = s.lifting[i];
        for (std::size_t c = 0; c < v.size(); ++c) val += v[c] * s.base[i][c];
        if (face.empty() || val < best) {
            face.assign(1, i);
            best = val;
        } else if (val == best) {
            face.push_back(i);
        }
    }
    return face;
}

RationalVector unique_solution(const LinearSystem& sys) {
    auto x = solve(sys.eq_a, sys.eq_b, sys.dim);
    if (!x) throw Error("internal: inconsistent facet equalities");
    return *x;
}

IntegerVector facet_normal(const RationalVector& v) {
    RationalVector full = v;
    full.emplace_back(1);
    return primitive(full);
}

void lower_faces_dfs(const LiftedSupport& s, std::size_t next, std::vector<int>& state,
                     std::vector<SupportFace>& out) {
    // state: 1 in, 0 out, -1 undecided
    const std::size_t n = s.base.dim();
    LinearSystem sys;
    sys.dim = n;
    std::size_t r = 0;
    while (state[r] != 1) ++r;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == r) continue;
        RationalVector a = difference(s.base[i], s.base[r]);
        Rational b = s.lifting[r] - s.lifting[i];
        if (state[i] == 1) sys.equal(std::move(a), std::move(b));
        else if (state[i] == 0) sys.greater(std::move(a), std::move(b));
        else sys.at_least(std::move(a), std::move(b));
    }
    if (!feasible(sys)) return;
    if (next == s.size()) {
        SupportFace f;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (state[i] == 1) f.points.push_back(i);
        f.dim = face_dimension(s, f.points);
        out.push_back(std::move(f));
        return;
    }
    for (int choice : {1, 0}) {
        state[next] = choice;
        lower_faces_dfs(s, next + 1, state, out);
    }
    state[next] = -1;
}

MixedCell cell_from_faces(const std::vector<LiftedSupport>& lifted, const IntegerVector& normal,
                          std::vector<std::vector<std::size_t>> faces) {
    MixedCell cell;
    cell.normal = normal;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        const auto& s = lifted[i].base;
        const auto& f = faces[i];
        // Extreme points along the face direction.
        RationalVector d = difference(s[f[1]], s[f[0]]);
        std::size_t lo = f[0], hi = f[0];
        Rational lo_v, hi_v;
        for (std::size_t k = 0; k < f.size(); ++k) {
            RationalVector p = difference(s[f[k]], s[f[0]]);
            Rational t = dot(p, d);
            if (k == 0 || t < lo_v) lo_v = t, lo = f[k];
            if (k == 0 || t > hi_v) hi_v = t, hi = f[k];
        }
        cell.edges.emplace_back(std::min(lo, hi), std::max(lo, hi));
    }
    cell.faces = std::move(faces);
    cell.volume = edge_volume(lifted, cell.edges);
    return cell;
}

void sort_cells(std::vector<MixedCell>& cells) {
    std::sort(cells.begin(), cells.end(),
              [](const MixedCell& a, const MixedCell& b) { return lex_less(a.normal, b.normal); });
}

// Shared search state for the mixed-cell depth-first search.
struct EdgeSearch {
    const std::vector<LiftedSupport>& lifted;
    std::vector<std::vector<SupportFace>> edges;
    std::size_t n;

    void descend(std::size_t level, LinearSystem& sys, Echelon& ech, std::vector<std::vector<std::size_t>>& chosen,
                 std::vector<MixedCell>& out) const {
        if (level == n) {
            const RationalVector v = unique_solution(sys);
            out.push_back(cell_from_faces(lifted, facet_normal(v), chosen));
            return;
        }
        const auto& s = lifted[level];
        for (const auto& face : edges[level]) {
            RationalVector dir = difference(s.base[face.points[1]], s.base[face.points[0]]);
            if (!ech.independent(dir)) continue;
            LinearSystem next = sys;
            add_face_rows(next, s, face.points);
            if (!feasible(next)) continue;
            Echelon e2 = ech;
            e2.add(std::move(dir));
            chosen.push_back(face.points);
            descend(level + 1, next, e2, chosen, out);
            chosen.pop_back();
        }
    }
};

EdgeSearch make_edge_search(const std::vector<LiftedSupport>& lifted) {
    const std::size_t n = common_dimension(lifted);
    if (lifted.size() != n)
        throw DimensionError("mixed cells need exactly n supports in dimension n");
    require_full_dimensional(lifted, n);
    EdgeSearch search{lifted, {}, n};
    for (const auto& s : lifted) search.edges.push_back(lower_edges(s));
    return search;
}

}  // namespace

std::vector<SupportFace> lower_faces(const LiftedSupport& s) {
    std::vector<SupportFace> out;
    for (std::size_t r = 0; r < s.size(); ++r) {
        std::vector<int> state(s.size(), -1);
        for (std::size_t i = 0; i < r; ++i) state[i] = 0;
        state[r] = 1;
        lower_faces_dfs(s, r + 1, state, out);
    }
    return out;
}

std::vector<SupportFace> lower_edges(const LiftedSupport& s) {
    std::vector<SupportFace> out;
    for (auto& f : lower_faces(s))
        if (f.dim == 1) out.push_back(std::move(f));
    return out;
}

std::vector<LowerFacet> lower_facets(const std::vector<LiftedSupport>& lifted) {
    const std::size_t n = common_dimension(lifted);
    require_full_dimensional(lifted, n);
    const std::size_t count = lifted.size();
    // Only positive-dimensional faces are branched on. A support left
    // unspecified must end up with a single minimising point, which makes
    // the search path to every facet unique.
    std::vector<std::vector<SupportFace>> faces(count);
    std::vector<std::size_t> capacity(count + 1, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (auto& f : lower_faces(lifted[i]))
            if (f.dim > 0) faces[i].push_back(std::move(f));
    for (std::size_t i = count; i-- > 0;) {
        std::size_t best = 0;
        for (const auto& f : faces[i]) best = std::max(best, f.dim);
        capacity[i] = capacity[i + 1] + best;
    }
    std::vector<LowerFacet> out;
    std::vector<const SupportFace*> chosen(count, nullptr);

    auto emit = [&](const RationalVector& v, std::size_t upto) {
        LowerFacet f;
        f.normal = facet_normal(v);
        f.is_mixed = count == n;
        for (std::size_t j = 0; j < count; ++j) {
            if (j <= upto && chosen[j]) {
                f.faces.push_back(chosen[j]->points);
            } else {
                auto face = argmin_face(lifted[j], v);
                if (j <= upto && face.size() != 1) return;  // reached along another path
                f.faces.push_back(std::move(face));
            }
            f.face_dims.push_back(face_dimension(lifted[j], f.faces.back()));
            if (f.face_dims.back() != 1) f.is_mixed = false;
        }
        out.push_back(std::move(f));
    };

    auto descend = [&](auto&& self, std::size_t level, const LinearSystem& sys, const Echelon& ech) -> void {
        if (level == count || ech.rank() + capacity[level] < n) return;
        self(self, level + 1, sys, ech);
        const auto& s = lifted[level];
        for (const auto& face : faces[level]) {
            LinearSystem next = sys;
            add_face_rows(next, s, face.points);
            if (!feasible(next)) continue;
            Echelon e2 = ech;
            for (std::size_t k = 1; k < face.points.size(); ++k)
                e2.add(difference(s.base[face.points[k]], s.base[face.points[0]]));
            chosen[level] = &face;
            if (e2.rank() == n) emit(unique_solution(next), level);
            else self(self, level + 1, next, e2);
            chosen[level] = nullptr;
        }
    };
    LinearSystem sys;
    sys.dim = n;
    descend(descend, 0, sys, Echelon(n));
    std::sort(out.begin(), out.end(),
              [](const LowerFacet& a, const LowerFacet& b) { return lex_less(a.normal, b.normal); });
    return out;
}

Subdivision induced_subdivision(const std::vector<LiftedSupport>& lifted) {
    return Subdivision{lifted, lower_facets(lifted)};
}

MixedCheck is_mixed_tuple(const std::vector<LiftedSupport>& lifted) {
    const std::size_t n = common_dimension(lifted);
    MixedCheck result;
    result.mixed = true;
    for (auto& f : lower_facets(lifted)) {
        if (f.dimension_sum() != n) {
            result.mixed = false;
            result.witness = std::move(f);
            break;
        }
    }
    return result;
}

std::vector<MixedCell> mixed_cells(const Subdivision& sub) {
    const std::size_t n = common_dimension(sub.lifted);
    if (sub.lifted.size() != n) throw DimensionError("mixed cells need exactly n supports in dimension n");
    std::vector<MixedCell> out;
    for (const auto& f : sub.cells) {
        if (f.dimension_sum() != n)
            throw InputError("lifting tuple is not mixed (a facet has summand dimension sum " +
                             std::to_string(f.dimension_sum()) + "); check it with is_mixed_tuple first");
        if (f.is_mixed) out.push_back(cell_from_faces(sub.lifted, f.normal, f.faces));
    }
    sort_cells(out);
    return out;
}

std::vector<MixedCell> enumerate_mixed_cells_serial(const std::vector<LiftedSupport>& lifted) {
    const EdgeSearch search = make_edge_search(lifted);
    LinearSystem sys;
    sys.dim = search.n;
    Echelon ech(search.n);
    std::vector<std::vector<std::size_t>> chosen;
    std::vector<MixedCell> out;
    search.descend(0, sys, ech, chosen, out);
    sort_cells(out);
    return out;
}

std::vector<MixedCell> enumerate_mixed_cells(const std::vector<LiftedSupport>& lifted, int jobs) {
    const EdgeSearch search = make_edge_search(lifted);
    const auto& first = search.edges[0];
    std::vector<std::vector<MixedCell>> branch(first.size());
    std::exception_ptr failure;
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t b = 0; b < first.size(); ++b) {
        try {
            LinearSystem sys;
            sys.dim = search.n;
            add_face_rows(sys, lifted[0], first[b].points);
            if (!feasible(sys)) continue;
            Echelon ech(search.n);
            ech.add(difference(lifted[0].base[first[b].points[1]], lifted[0].base[first[b].points[0]]));
            std::vector<std::vector<std::size_t>> chosen{first[b].points};
            search.descend(1, sys, ech, chosen, branch[b]);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<MixedCell> out;
    for (auto& v : branch)
        for (auto& c : v) out.push_back(std::move(c));
    sort_cells(out);
    return out;
}

Integer edge_volume(const std::vector<LiftedSupport>& lifted,
                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<IntegerVector> m;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        IntegerVector row;
        const auto& s = lifted[i].base;
        for (std::size_t c = 0; c < s.dim(); ++c) row.emplace_back(s[edges[i].second][c] - s[edges[i].first][c]);
        m.push_back(std::move(row));
    }
    return abs(determinant(std::move(m)));
}

MixedVolumeResult mixed_volume(const std::vector<Support>& supports,
                               const std::optional<std::vector<std::vector<Rational>>>& liftings,
                               bool allow_perturb, int jobs) {
    std::vector<LiftedSupport> lifted;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        if (liftings) {
            if (liftings->size() != supports.size()) throw InputError("one lifting per support required");
            lifted.emplace_back(supports[i], (*liftings)[i]);
        } else {
            lifted.push_back(LiftedSupport::flat(supports[i]));
        }
    }
    MixedVolumeResult result;
    if (auto check = is_mixed_tuple(lifted); !check.mixed) {
        if (liftings && !allow_perturb) {
            std::string normal;
            for (const auto& x : check.witness->normal) normal += (normal.empty() ? "" : ",") + x.get_str();
            throw InputError("lifting tuple is not mixed: lower facet with normal (" + normal +
                             ") has summand dimensions adding to " +
                             std::to_string(check.witness->dimension_sum()) + "; enable perturbation");
        }
        // Deterministic weights; a handful of scales is always enough in
        // practice, and each candidate is verified before use.
        std::mt19937 rng(20260101);
        std::uniform_int_distribution<long> weight(1, 1000003);
        bool found = false;
        for (int attempt = 0; attempt < 16 && !found; ++attempt) {
            std::vector<LiftedSupport> trial = lifted;
            const Rational delta(1, 1L << (attempt % 8));
            for (auto& s : trial)
                for (auto& h : s.lifting) h += delta * weight(rng);
            if (is_mixed_tuple(trial).mixed) {
                lifted = std::move(trial);
                found = true;
            }
        }
        if (!found) throw Error("no verified mixed perturbation found");
        result.perturbed = true;
    }
    result.value = 0;
    for (const auto& c : enumerate_mixed_cells(lifted, jobs)) result.value += c.volume;
    result.lifting_used = std::move(lifted);
    return result;
}

}  // namespace fewnomial::polyhedra
