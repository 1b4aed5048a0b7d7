// Serial reference kernels against their OpenMP counterparts.
// Set OMP_NUM_THREADS to vary the parallel side.

#include <benchmark/benchmark.h>

#include "selberg/contour.hpp"
#include "selberg/converse.hpp"
#include "selberg/lfunc.hpp"
#include "selberg/modular.hpp"
#include "selberg/numtheory.hpp"

using namespace selberg;

namespace {

void BM_sieve_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(nt::primes_up_to(static_cast<std::uint32_t>(st.range(0))));
}
void BM_sieve_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(nt::reference::primes_up_to_serial(static_cast<std::uint32_t>(st.range(0))));
}
BENCHMARK(BM_sieve_parallel)->Arg(10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sieve_serial)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_tau_ntt(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(modular::ramanujan_tau(st.range(0)));
}
void BM_tau_naive(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(modular::reference::ramanujan_tau_naive(st.range(0)));
}
BENCHMARK(BM_tau_ntt)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tau_naive)->Arg(5000)->Unit(benchmark::kMillisecond);

const Accuracy kEval{1e-9, 1e-13, 2'000'000};

void BM_dirichlet_parallel(benchmark::State& st) {
    static const auto d = lfunc::make_delta(1'000'000);
    for (auto _ : st) benchmark::DoNotOptimize(lfunc::dirichlet_eval(d, cplx(3.0, 10.0), kEval));
}
void BM_dirichlet_serial(benchmark::State& st) {
    static const auto d = lfunc::make_delta(1'000'000);
    for (auto _ : st) benchmark::DoNotOptimize(lfunc::reference::dirichlet_eval_serial(d, cplx(3.0, 10.0), kEval));
}
BENCHMARK(BM_dirichlet_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dirichlet_serial)->Unit(benchmark::kMillisecond);

const Accuracy kMellin{1e-12, 1e-12, 1'000'000};

void BM_inverse_mellin_parallel(benchmark::State& st) {
    static const auto d = lfunc::make_delta(20'000);
    for (auto _ : st) benchmark::DoNotOptimize(lfunc::inverse_mellin_phi(d, 0.9, kMellin));
}
void BM_inverse_mellin_serial(benchmark::State& st) {
    static const auto d = lfunc::make_delta(20'000);
    for (auto _ : st) benchmark::DoNotOptimize(lfunc::reference::inverse_mellin_phi_serial(d, 0.9, kMellin));
}
BENCHMARK(BM_inverse_mellin_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_inverse_mellin_serial)->Unit(benchmark::kMillisecond);

const std::vector<double> kR{1.1, 1.2, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0};
const std::vector<double> kTheta{0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4};
const Accuracy kSweep{1e-14, 1e-14, 100'000};

void BM_symmetry_sweep_parallel(benchmark::State& st) {
    static const auto P = converse::GL2Params::delta(20'000);
    for (auto _ : st) benchmark::DoNotOptimize(converse::symmetry_sweep(P, kR, kTheta, kSweep));
}
void BM_symmetry_sweep_serial(benchmark::State& st) {
    static const auto P = converse::GL2Params::delta(20'000);
    for (auto _ : st) benchmark::DoNotOptimize(converse::reference::symmetry_sweep_serial(P, kR, kTheta, kSweep));
}
BENCHMARK(BM_symmetry_sweep_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_symmetry_sweep_serial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
