#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "gentle/cma.hpp"
#include "gentle/derived.hpp"
#include "gentle/generator.hpp"
#include "gentle/homodim.hpp"
#include "gentle/representation.hpp"

using namespace gentle;

namespace {

BoundQuiver corpus(const std::string& name) {
    std::ifstream in(std::string(GENTLE_CORPUS_DIR) + "/" + name + ".quiver");
    std::stringstream text;
    text << in.rdbuf();
    return parse_bound_quiver(text.str());
}

BoundQuiver random_quiver(std::uint64_t seed, int vertices) {
    GeneratorConfig c;
    c.seed = seed;
    c.min_vertices = c.max_vertices = vertices;
    return generate(c);
}

void BM_Rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (i * 7 + j * 3) % 5 - 2;
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateStrings(benchmark::State& state) {
    const BoundQuiver e1 = corpus("e1");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_strings(e1, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateStrings)->Arg(4)->Arg(8)->Arg(12);

void BM_ResolvePd(benchmark::State& state) {
    const BoundQuiver e1 = corpus("e1");
    const auto strings = enumerate_strings(e1, static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& w : strings) benchmark::DoNotOptimize(resolve_pd(e1, string_module(e1, w)).value);
    state.SetItemsProcessed(state.iterations() * static_cast<long>(strings.size()));
}
BENCHMARK(BM_ResolvePd)->Arg(2)->Arg(4);

void BM_FormulaPd(benchmark::State& state) {
    const BoundQuiver e1 = corpus("e1");
    GentleContext ctx(e1);
    const auto strings = enumerate_strings(e1, static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& w : strings) benchmark::DoNotOptimize(proj_dim_string(ctx, w));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(strings.size()));
}
BENCHMARK(BM_FormulaPd)->Arg(2)->Arg(4)->Arg(8);

void BM_HomotopyBandSearch(benchmark::State& state) {
    const BoundQuiver bq = random_quiver(7, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(homotopy_band_exists(bq).exists);
}
BENCHMARK(BM_HomotopyBandSearch)->Arg(4)->Arg(8)->Arg(12);

void BM_BuildCma(benchmark::State& state) {
    const BoundQuiver e1 = corpus("e1");
    for (auto _ : state) benchmark::DoNotOptimize(build_cma(e1).quiver.vertex_count());
}
BENCHMARK(BM_BuildCma);

}  // namespace

BENCHMARK_MAIN();
