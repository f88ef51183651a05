// Serial reference kernels against their OpenMP counterparts.
#include "skeinlab/balanced_lattice.hpp"
#include "skeinlab/qtorus.hpp"
#include "skeinlab/states.hpp"

#include <benchmark/benchmark.h>

#include <memory>

using namespace skeinlab;

namespace {

// (p, q) torus curves ordered by number of intersection points.
NormalCurve bench_curve(long i) {
    static const long pq[][2] = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}};
    return torus_curve(pq[i][0], pq[i][1]);
}

void BM_states_bruteforce_serial(benchmark::State& state) {
    const NormalCurve c = bench_curve(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_states_bruteforce_serial(c));
    state.counters["points"] = static_cast<double>(c.total());
}

void BM_states_bruteforce_omp(benchmark::State& state) {
    const NormalCurve c = bench_curve(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_states_bruteforce_omp(c));
    state.counters["points"] = static_cast<double>(c.total());
}

void BM_states_transfer(benchmark::State& state) {
    const NormalCurve c = bench_curve(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible_states(c));
    state.counters["points"] = static_cast<double>(c.total());
}

struct IrrepFixture {
    std::unique_ptr<QuantumTorus> torus;
    std::unique_ptr<TorusIrrep> rho;

    IrrepFixture(int genus, long n) {
        torus = std::make_unique<QuantumTorus>(BalancedLattice(sigma_g_star(genus)).skew_lattice(), n);
        rho = std::make_unique<TorusIrrep>(build_irrep(*torus, trivial_character(*torus)));
    }
};

const IrrepFixture& irrep_fixture(long id) {
    static const IrrepFixture g1n5(1, 5), g2n3(2, 3);
    return id == 0 ? g1n5 : g2n3;
}

void BM_verify_irrep_serial(benchmark::State& state) {
    const IrrepFixture& f = irrep_fixture(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_irrep_serial(*f.torus, *f.rho));
    state.counters["dim"] = static_cast<double>(f.rho->dimension);
}

void BM_verify_irrep_omp(benchmark::State& state) {
    const IrrepFixture& f = irrep_fixture(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_irrep_omp(*f.torus, *f.rho));
    state.counters["dim"] = static_cast<double>(f.rho->dimension);
}

}  // namespace

BENCHMARK(BM_states_bruteforce_serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_states_bruteforce_omp)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_states_transfer)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_irrep_serial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_irrep_omp)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
