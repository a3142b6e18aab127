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

// Parallel against serial mixed-cell search. Arguments are the dimension n
// and, for the random tuples, the number of points per support.

#include "fewnomial/extremal/lemma_tri.hpp"
#include "fewnomial/polyhedra/lower_hull.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace fewnomial;
using polyhedra::LiftedSupport;
using polyhedra::Point;
using polyhedra::Support;

namespace {

std::vector<LiftedSupport> random_tuple(std::size_t n, std::size_t points) {
    std::mt19937 rng(static_cast<unsigned>(17 * n + points));
    std::uniform_int_distribution<long> coord(0, 4), height(0, 1 << 20);
    std::vector<LiftedSupport> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Point> pts;
        while (pts.size() < points) {
            Point p(n);
            for (auto& x : p) x = coord(rng);
            pts.push_back(p);
        }
        Support s(n, pts);
        std::vector<numeric::Rational> l;
        for (std::size_t k = 0; k < s.size(); ++k) l.emplace_back(height(rng));
        out.emplace_back(s, l);
    }
    return out;
}

void BM_TrianglesParallel(benchmark::State& state) {
    const auto lifted = extremal::lemma_triangles(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(polyhedra::enumerate_mixed_cells(lifted));
}

void BM_TrianglesSerial(benchmark::State& state) {
    const auto lifted = extremal::lemma_triangles(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(polyhedra::enumerate_mixed_cells_serial(lifted));
}

void BM_RandomParallel(benchmark::State& state) {
    const auto lifted = random_tuple(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(polyhedra::enumerate_mixed_cells(lifted));
}

void BM_RandomSerial(benchmark::State& state) {
    const auto lifted = random_tuple(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(polyhedra::enumerate_mixed_cells_serial(lifted));
}

}  // namespace

BENCHMARK(BM_TrianglesParallel)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrianglesSerial)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomParallel)->Args({3, 6})->Args({4, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSerial)->Args({3, 6})->Args({4, 5})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
