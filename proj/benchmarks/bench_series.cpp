#include <etaq/eta.hpp>
#include <etaq/search.hpp>
#include <etaq/theta.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace etaq;

void BM_MulExact(benchmark::State& st)
{
    const auto N = static_cast<std::size_t>(st.range(0));
    const auto a = eta_series(parse_eta("1/f1"), N, ExactInt{});
    const auto b = eta_series(parse_eta("f2^2/f1"), N, ExactInt{});
    for (auto _ : st) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_MulExact)->Arg(500)->Arg(2000);

void BM_MulMod25(benchmark::State& st)
{
    const auto N = static_cast<std::size_t>(st.range(0));
    const auto a = eta_series(parse_eta("1/f1"), N, ModInt(25));
    const auto b = eta_series(parse_eta("f2^2/f1"), N, ModInt(25));
    for (auto _ : st) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_MulMod25)->Arg(2000)->Arg(15000);

// Sparse pentagonal route against the dense reference route.
void BM_EtaSparse(benchmark::State& st)
{
    const auto Q = parse_eta("f1^2*f2^5*f5/f4^2");
    for (auto _ : st) benchmark::DoNotOptimize(eta_series(Q, static_cast<std::size_t>(st.range(0)), ModInt(25)));
}
BENCHMARK(BM_EtaSparse)->Arg(2000)->Arg(15000);

void BM_EtaGeneric(benchmark::State& st)
{
    const auto Q = parse_eta("f1^2*f2^5*f5/f4^2");
    for (auto _ : st) benchmark::DoNotOptimize(eta_series_generic(Q, static_cast<std::size_t>(st.range(0)), ModInt(25)));
}
BENCHMARK(BM_EtaGeneric)->Arg(2000);

void BM_ThetaS1(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(builtin_theta("S1", static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_ThetaS1)->Arg(2000)->Arg(10000);

void BM_QuintupleScan(benchmark::State& st)
{
    const auto F = parse_eta("f1*f5");
    for (auto _ : st) benchmark::DoNotOptimize(quintuple_scan(F, static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_QuintupleScan)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
