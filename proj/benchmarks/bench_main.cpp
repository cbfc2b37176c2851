#include <benchmark/benchmark.h>

#include "modgen/genesis.hpp"
#include "modgen/parse.hpp"

using namespace modgen;

// Fresh objects every iteration: most results are cached per instance, so
// reusing one would only measure the cache.

static void BM_groebner_basis(benchmark::State& state) {
  Limits lim;
  auto A = PolyRing::make(FieldSpec::Q(), {"x", "y", "z"});
  auto gens = parse_poly_list(A, "x^2+y^2+z^2-1; x*y-z; y^2-x*z");
  for (auto _ : state) {
    Ideal i(A, gens);
    benchmark::DoNotOptimize(i.gb(lim).basis.size());
  }
}
BENCHMARK(BM_groebner_basis);

static void BM_resolution_residue_field(benchmark::State& state) {
  Limits lim;
  auto A = PolyRing::make(FieldSpec::Q(), {"x", "y", "z"});
  auto R = QuotientRing::make(A, {}, lim);
  for (auto _ : state) {
    PresentedModule k = PresentedModule::cyclic(
        R, parse_poly_list(A, "x; y; z"));
    FreeResolution res(k);
    res.extend_to(3, lim);
    benchmark::DoNotOptimize(res.rank(3, lim));
  }
}
BENCHMARK(BM_resolution_residue_field);

static void BM_ext_self(benchmark::State& state) {
  Limits lim;
  auto A = PolyRing::make(FieldSpec::Q(), {"x", "y"});
  auto node = QuotientRing::make(A, {parse_poly(A, "x*y")}, lim);
  for (auto _ : state) {
    PresentedModule m = PresentedModule::cyclic(node, {parse_poly(A, "x")});
    PresentedModule e = ext_module(2, m, m, lim);
    benchmark::DoNotOptimize(e.ngens());
  }
}
BENCHMARK(BM_ext_self);

static void BM_certify_cusp_maximal_ideal(benchmark::State& state) {
  Limits lim;
  auto A = PolyRing::make(FieldSpec::Q(), {"x", "y"});
  auto cusp = QuotientRing::make(A, {parse_poly(A, "y^2-x^3")}, lim);
  GeneratorResult g = build_generator(cusp, lim);
  Subquotient sq = present_subquotient(
      cusp, 1, {Vec{parse_poly(A, "x")}, Vec{parse_poly(A, "y")}}, {}, lim);
  for (auto _ : state) {
    Certificate c = certify_module(sq.module, g, lim);
    benchmark::DoNotOptimize(check_certificate(c, lim).ok);
  }
}
BENCHMARK(BM_certify_cusp_maximal_ideal);

BENCHMARK_MAIN();
