#include <benchmark/benchmark.h>

#include "repkern/boundary_operator.hpp"
#include "repkern/cn_kernels.hpp"
#include "repkern/contour.hpp"
#include "repkern/fractional.hpp"

using namespace repkern;

namespace {

void BM_CauchyOperatorAssembly(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const PlanarContour e = make_ellipse(N, 1.2, 1.0);
  for (auto _ : state) {
    BoundaryOperator H = cauchy_operator(e);
    benchmark::DoNotOptimize(H.M.data());
  }
}
BENCHMARK(BM_CauchyOperatorAssembly)->Arg(128)->Arg(256);

void BM_SzegoDirectSolve(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const PlanarContour e = make_ellipse(N, 1.2, 1.0);
  const BoundaryOperator H = cauchy_operator(e);
  const BoundaryOperator A = ks_operator(H);
  for (auto _ : state) {
    BoundaryOperator S = szego_projection_direct(H, A);
    benchmark::DoNotOptimize(S.M.data());
  }
}
BENCHMARK(BM_SzegoDirectSolve)->Arg(128)->Arg(256);

void BM_OperatorNorm(benchmark::State& state) {
  const PlanarContour e = make_ellipse(static_cast<int>(state.range(0)), 1.2, 1.0);
  const BoundaryOperator A = ks_operator(cauchy_operator(e));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_norm_estimate(A));
}
BENCHMARK(BM_OperatorNorm)->Arg(128)->Arg(256);

void BM_SurfaceGrid(benchmark::State& state) {
  const DefiningDomain ball = make_ball();
  for (auto _ : state) {
    HypersurfaceGrid g = make_surface_grid(ball, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(g.nodes.data());
  }
}
BENCHMARK(BM_SurfaceGrid)->Arg(16)->Arg(32);

void BM_BmReproduce(benchmark::State& state) {
  const HypersurfaceGrid g = make_surface_grid(make_ball(), static_cast<int>(state.range(0)));
  const CnPoint z{cd(0.3, 0.1), cd(-0.2, 0.25)};
  const CnFunction f = [](cd a, cd b) { return a * a * b; };
  for (auto _ : state) benchmark::DoNotOptimize(bm_reproduce(g, f, z));
}
BENCHMARK(BM_BmReproduce)->Arg(16)->Arg(32);

void BM_FractionalRoundTrip(benchmark::State& state) {
  std::vector<cd> f(state.range(0));
  for (std::size_t k = 0; k < f.size(); ++k)
    f[k] = std::exp(std::cos(2.0 * M_PI * double(k) / double(f.size())));
  for (auto _ : state) benchmark::DoNotOptimize(frac_int(0.5, frac_diff(0.5, f)));
}
BENCHMARK(BM_FractionalRoundTrip)->Arg(256)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
