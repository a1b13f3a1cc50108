// Serial reference vs OpenMP kernels on the two heaviest exact computations.

#include "certipoly/data.hpp"
#include "certipoly/discrimination.hpp"
#include "certipoly/resultant.hpp"

#include <benchmark/benchmark.h>

using namespace certipoly;

namespace {

const DataSet& data()
{
    static const DataSet d = load_data_set(CERTIPOLY_DATA_DIR);
    return d;
}

void discriminant_p2(benchmark::State& state)
{
    const auto exec = static_cast<Execution>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(discriminant_sequence(data().p2, exec));
    state.SetLabel(exec == Execution::serial ? "serial" : "parallel x" + std::to_string(max_threads()));
}

void discriminant_p5(benchmark::State& state)
{
    const auto exec = static_cast<Execution>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(discriminant_sequence(data().p5, exec));
    state.SetLabel(exec == Execution::serial ? "serial" : "parallel x" + std::to_string(max_threads()));
}

void resultant_p2_p3(benchmark::State& state)
{
    const auto exec = static_cast<Execution>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(resultant_in_t(data().p2, data().p3, exec));
    state.SetLabel(exec == Execution::serial ? "serial" : "parallel x" + std::to_string(max_threads()));
}

constexpr long kSerial = static_cast<long>(Execution::serial);
constexpr long kParallel = static_cast<long>(Execution::parallel);

}  // namespace

BENCHMARK(discriminant_p2)->Arg(kSerial)->Arg(kParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(discriminant_p5)->Arg(kSerial)->Arg(kParallel)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(resultant_p2_p3)->Arg(kSerial)->Arg(kParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
