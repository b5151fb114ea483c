#include <benchmark/benchmark.h>

#include <random>

#include "crosscaps/clutching.hpp"
#include "crosscaps/cohomology.hpp"
#include "crosscaps/holonomy.hpp"
#include "crosscaps/spectral.hpp"

namespace cc = crosscaps;

static void BM_holonomy(benchmark::State& state) {
    cc::OperatorLoop loop;
    loop.base = cc::ShSurface(
        1, {cc::BoundaryKind::Standard, cc::BoundaryKind::Standard,
            cc::BoundaryKind::Crosscap, cc::BoundaryKind::Crosscap});
    loop.std_data = {{1, 0, 1}, {0, 1, 0}};
    loop.crosscap_data = {{1}, {0}};
    for (auto _ : state) benchmark::DoNotOptimize(cc::holonomy(loop));
}
BENCHMARK(BM_holonomy);

static void BM_whitney_sum_w2(benchmark::State& state) {
    const auto ring = cc::ring_of(cc::ClosedSurfaceInfo{false, 8, 0});
    std::vector<cc::OneClass> lines;
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < 16; ++i) {
        cc::OneClass line(8);
        for (auto& b : line) b = static_cast<cc::Bit>(bit(rng));
        lines.push_back(line);
    }
    for (auto _ : state) benchmark::DoNotOptimize(cc::whitney_sum_w2(lines, ring));
}
BENCHMARK(BM_whitney_sum_w2);

static void BM_det_winding(benchmark::State& state) {
    const auto loop = cc::make_disk_loop(4, 3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cc::det_winding(loop));
}
BENCHMARK(BM_det_winding)->Arg(256)->Arg(4096);

static void BM_classify_disk(benchmark::State& state) {
    const auto loop = cc::make_disk_loop(3, -2, 256);
    for (auto _ : state) benchmark::DoNotOptimize(cc::classify_disk(loop));
}
BENCHMARK(BM_classify_disk);

static void BM_numerical_kernel(benchmark::State& state) {
    cc::DiskProblem p;
    p.twist = static_cast<int>(state.range(0));
    p.truncation = 2 * std::abs(p.twist) + 8;
    p.collocation = 4 * p.truncation;
    for (auto _ : state) benchmark::DoNotOptimize(cc::numerical_kernel_dim(p));
}
BENCHMARK(BM_numerical_kernel)->Arg(0)->Arg(3);

static void BM_cauchy_derivative(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cc::cauchy_derivative(3, 6, 64));
}
BENCHMARK(BM_cauchy_derivative);
