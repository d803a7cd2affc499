#include <benchmark/benchmark.h>

#include <random>

#include "flowcoh/functors.hpp"
#include "flowcoh/lattice.hpp"
#include "flowcoh/matrix.hpp"
#include "flowcoh/sections.hpp"

namespace {

using namespace flowcoh;

IntMatrix randomMatrix(std::mt19937_64& rng, int rows, int cols, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = dist(rng);
    return m;
}

void benchSnf(benchmark::State& state) {
    std::mt19937_64 rng(91);
    const int n = static_cast<int>(state.range(0));
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 32; ++i)
        inputs.push_back(randomMatrix(rng, n, n, 20));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(snf(inputs[i]));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(benchSnf)->Arg(4)->Arg(6)->Arg(8);

void benchHnf(benchmark::State& state) {
    std::mt19937_64 rng(92);
    const int n = static_cast<int>(state.range(0));
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 32; ++i)
        inputs.push_back(randomMatrix(rng, n, n + 2, 50));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hnf(inputs[i]));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(benchHnf)->Arg(4)->Arg(8);

void benchLatticeIntersection(benchmark::State& state) {
    std::mt19937_64 rng(93);
    const int n = 5;
    std::vector<std::pair<Lattice, Lattice>> inputs;
    for (int i = 0; i < 32; ++i)
        inputs.push_back({Lattice::fromGenerators(n, randomMatrix(rng, n, n, 9)),
                          Lattice::fromGenerators(n, randomMatrix(rng, n, n, 9))});
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(latticeIntersection(inputs[i].first, inputs[i].second));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(benchLatticeIntersection);

void benchSectionCrossCheck(benchmark::State& state) {
    std::mt19937_64 rng(94);
    const int g = 3;
    std::vector<std::pair<CoveringEndo, LoopMatrix>> inputs;
    while (inputs.size() < 16) {
        IntMatrix a = randomMatrix(rng, g, g, 4);
        Int det = determinant(a);
        if (det == 0 || det > 12 || det < -12)
            continue;
        inputs.push_back({CoveringEndo(a), LoopMatrix{randomMatrix(rng, g, 3, 4)}});
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(crossCheck(inputs[i].first, inputs[i].second));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(benchSectionCrossCheck);

void benchExt(benchmark::State& state) {
    FgAbGroup a = FgAbGroup::fromCyclicFactors(2, {Int(12), Int(30), Int(8)});
    FgAbGroup b = FgAbGroup::fromCyclicFactors(1, {Int(9), Int(64), Int(35)});
    for (auto _ : state)
        benchmark::DoNotOptimize(ext(a, b));
}
BENCHMARK(benchExt);

void benchTwistedProduct(benchmark::State& state) {
    FgAbGroup base = FgAbGroup::cyclic(8);
    FgAbGroup fibre = FgAbGroup::cyclic(8);
    Cocycle2 phi = cocycleZk(8, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(twistedProduct(base, fibre, phi));
}
BENCHMARK(benchTwistedProduct);

} // namespace

BENCHMARK_MAIN();
