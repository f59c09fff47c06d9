#include <benchmark/benchmark.h>

#include <cmath>

#include "xps/riemann.hpp"
#include "xps/semiclassical.hpp"
#include "xps/wavefn.hpp"

using namespace xps;

namespace {

const double kSqrt2 = std::sqrt(2.0);

void BM_Theta(benchmark::State& s) {
    double E = 10.0;
    for (auto _ : s) {
        benchmark::DoNotOptimize(theta(E));
        E += 1e-3;
    }
}
BENCHMARK(BM_Theta);

void BM_Hyp1F2(benchmark::State& s) {
    const cplx a(0.25, -7.0);
    for (auto _ : s) benchmark::DoNotOptimize(hyp1f2(a, 0.5, a + 1.0, -9.0));
}
BENCHMARK(BM_Hyp1F2);

void BM_Erfc(benchmark::State& s) {
    const cplx z(1.5, -2.0);
    for (auto _ : s) benchmark::DoNotOptimize(erfc(z));
}
BENCHMARK(BM_Erfc);

void BM_OmegaMinus(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(omega_minus(cplx(20.0, 0.0)));
}
BENCHMARK(BM_OmegaMinus);

void BM_FRs(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(f_rs(static_cast<double>(s.range(0))));
}
BENCHMARK(BM_FRs)->Arg(20)->Arg(100)->Arg(1000);

// cost grows quickly as t drops: the weights decay over more terms
void BM_FBkSum(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(f_bk_sum(static_cast<double>(s.range(0)), 4.0).f);
}
BENCHMARK(BM_FBkSum)->Arg(10)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_JostSmooth(benchmark::State& s) {
    const auto bs = make_bk_smooth(kSqrt2, kSqrt2);
    for (auto _ : s) benchmark::DoNotOptimize(jost_F(bs, 17.3));
}
BENCHMARK(BM_JostSmooth);

void BM_SmoothZeros(benchmark::State& s) {
    const auto bs = make_bk_smooth(kSqrt2, kSqrt2, 1.0, kTwoPi, Parity::plus, true);
    for (auto _ : s) benchmark::DoNotOptimize(find_bound_states(bs, 10.0, 30.0));
}
BENCHMARK(BM_SmoothZeros)->Unit(benchmark::kMillisecond);

void BM_RiemannZerosRs(benchmark::State& s) {
    const auto bs = riemann_boundary(canonical_config());
    for (auto _ : s) benchmark::DoNotOptimize(find_bound_states(bs, 10.0, 30.0));
}
BENCHMARK(BM_RiemannZerosRs)->Unit(benchmark::kMillisecond);

void BM_UnwindNfl(benchmark::State& s) {
    std::vector<double> g;
    for (double t = 10.0; t <= 40.0; t += 0.01) g.push_back(t);
    for (auto _ : s) benchmark::DoNotOptimize(unwind_nfl(canonical_config(), g));
}
BENCHMARK(BM_UnwindNfl)->Unit(benchmark::kMillisecond);

void BM_PsiSmoothProfile(benchmark::State& s) {
    const auto xs = hybrid_grid(0.01, 14.0);
    for (auto _ : s) benchmark::DoNotOptimize(psi_bound_smooth_profile(14.5179196283, xs));
}
BENCHMARK(BM_PsiSmoothProfile)->Unit(benchmark::kMillisecond);

void BM_PsiExactProfile(benchmark::State& s) {
    const auto bs = riemann_boundary(canonical_config());
    const double E = find_bound_states(bs, 13.0, 15.0)[0].E;
    const auto xs = hybrid_grid(0.01, 14.0);
    for (auto _ : s) benchmark::DoNotOptimize(psi_bound_exact_profile(bs, E, xs, 60.0));
}
BENCHMARK(BM_PsiExactProfile)->Unit(benchmark::kMillisecond);

void BM_BoundNorm(benchmark::State& s) {
    const auto bs = make_bk_smooth(kSqrt2, kSqrt2, 1.0, kTwoPi, Parity::plus, true);
    for (auto _ : s) benchmark::DoNotOptimize(bound_norm(bs, 14.5179196283));
}
BENCHMARK(BM_BoundNorm)->Unit(benchmark::kMillisecond);

void BM_BoundaryFromNfl(benchmark::State& s) {
    FluctuationDensity d;
    d.n_fl = [](double E) { return 0.02 * std::sin(0.3 * E); };
    std::vector<double> g;
    for (double E = 1.0; E <= 45.0; E += 0.05) g.push_back(E);
    for (auto _ : s) benchmark::DoNotOptimize(boundary_from_nfl(d, 1.0, kTwoPi, g));
}
BENCHMARK(BM_BoundaryFromNfl)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
