#include <benchmark/benchmark.h>

#include <random>

#include "ellbott/criteria.hpp"
#include "ellbott/errors.hpp"
#include "ellbott/localgeom.hpp"
#include "ellbott/weierstrass.hpp"

using namespace ellbott;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Rational> cs;
  for (int i = 0; i <= degree; ++i) cs.emplace_back(coeff(rng));
  return UniPoly::from_coeffs(std::move(cs));
}

WeierstrassData worked_model(unsigned beta) {
  return WeierstrassData(
      beta, BinaryForm(4 * beta, UniPoly::monomial(1, 4 * beta)),
      BinaryForm(6 * beta, UniPoly::monomial(1, 6 * beta) + UniPoly::monomial(1, 1)));
}

void BM_ClassifyWorkedModel(benchmark::State& state) {
  const auto beta = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const FiberCensus census = worked_model(beta).classify_fibers();
    benchmark::DoNotOptimize(census.total_delta());
  }
}
BENCHMARK(BM_ClassifyWorkedModel)->Arg(1)->Arg(2)->Arg(3);

void BM_ClassifyRandomModel(benchmark::State& state) {
  const auto beta = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(42);
  for (auto _ : state) {
    try {
      const WeierstrassData w(beta, BinaryForm(4 * beta, random_poly(rng, 4 * beta)),
                              BinaryForm(6 * beta, random_poly(rng, 6 * beta)));
      if (w.is_minimal().minimal) {
        benchmark::DoNotOptimize(w.classify_fibers().total_euler());
      }
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_ClassifyRandomModel)->Arg(1)->Arg(3);

void BM_PolyGcd(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const UniPoly common = random_poly(rng, 8);
  const UniPoly a = random_poly(rng, 12) * common;
  const UniPoly b = random_poly(rng, 12) * common;
  for (auto _ : state) {
    benchmark::DoNotOptimize(UniPoly::gcd(a, b));
  }
}
BENCHMARK(BM_PolyGcd);

void BM_JacobianDegree(benchmark::State& state) {
  const LocalEquation eq = local_model(KodairaType::IV());
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobian_scheme_degree(eq));
  }
}
BENCHMARK(BM_JacobianDegree);

void BM_RestrictionRankCycle(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const SectionSpaceModel model{KodairaType::In(n), std::vector<unsigned>(n, 3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(restriction_rank(model).rank);
  }
}
BENCHMARK(BM_RestrictionRankCycle)->Arg(2)->Arg(5);

void BM_DecideBott(benchmark::State& state) {
  const SurfaceSummary s = build_summary(CompleteIntersectionSpec{1, 1, 23, std::nullopt});
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_bott(s).bott);
  }
}
BENCHMARK(BM_DecideBott);

}  // namespace

BENCHMARK_MAIN();
