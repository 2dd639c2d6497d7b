#include <benchmark/benchmark.h>

#include "quatrace/quat.hpp"
#include "quatrace/trace.hpp"
#include "quatrace/verify.hpp"

using namespace quatrace;

namespace {

void BM_TraceGamma0(benchmark::State& state) {
    FactoredInt level = FactoredInt::of_long(state.range(0));
    for (auto _ : state) {
        TraceResult r = trace_gamma0(level, 12, 97);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_TraceGamma0)->Arg(1)->Arg(11)->Arg(14);

void BM_TraceGammaPrime(benchmark::State& state) {
    QuaternionSpec spec = QuaternionSpec::make(6, 1);
    for (auto _ : state) {
        TraceResult r = trace_gamma_prime(spec, static_cast<int>(state.range(0)), 97);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_TraceGammaPrime)->Arg(2)->Arg(12);

void BM_ClassNumberSweep(benchmark::State& state) {
    long long bound = state.range(0);
    for (auto _ : state) {
        Int total = 0;
        for (long long d = -3; d >= -bound; --d)
            if (is_discriminant(Int(d))) total += class_number(Int(d));
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ClassNumberSweep)->Arg(400)->Arg(2000);

void BM_VerifyJLPoint(benchmark::State& state) {
    QuaternionSpec spec = QuaternionSpec::make(10, 3);
    for (auto _ : state) {
        IdentityCheck check = check_jl(spec, 12, 97);
        benchmark::DoNotOptimize(check.pass);
    }
}
BENCHMARK(BM_VerifyJLPoint);

void BM_NormSearch(benchmark::State& state) {
    for (auto _ : state) {
        std::vector<QuatElement> hits = search_norm(3, -1, state.range(0), true);
        benchmark::DoNotOptimize(hits.size());
    }
}
BENCHMARK(BM_NormSearch)->Arg(5)->Arg(15);

} // namespace

BENCHMARK_MAIN();
