#include <benchmark/benchmark.h>

#include "klcells/asymptotic.hpp"
#include "klcells/conjugacy.hpp"
#include "klcells/hecke.hpp"
#include "klcells/iwahori_hecke.hpp"
#include "klcells/lambda_geometry.hpp"

using namespace klcells;

namespace {

const char* const kTypes[] = {"A2", "B2", "G2"};

void BM_CoxeterTable(benchmark::State& state) {
  RootDatum d = build_root_datum(kTypes[state.range(0)], CaseFlag::B);
  for (auto _ : state) {
    CoxeterTable t(d, d.simple(), static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_CoxeterTable)->ArgsProduct({{0, 1, 2}, {6, 10}})->Unit(benchmark::kMillisecond);

void BM_KLBasisAffine(benchmark::State& state) {
  RootDatum d = build_root_datum(kTypes[state.range(0)], CaseFlag::B);
  CoxeterTable t(d, d.simple(), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    IwahoriHecke h(t);
    benchmark::DoNotOptimize(h.p(0, t.size() - 1));
  }
  state.counters["elements"] = t.size();
}
BENCHMARK(BM_KLBasisAffine)->ArgsProduct({{0, 1, 2}, {6, 8, 10}})->Unit(benchmark::kMillisecond);

void BM_CellsOfWLambda(benchmark::State& state) {
  RootDatum d = build_root_datum(kTypes[state.range(0)], CaseFlag::B);
  LambdaGeometry g(d, Lambda::zero(d));
  for (auto _ : state) {
    CellPartition p = cells_of_W_lambda(g, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(p.num_two_sided());
  }
}
BENCHMARK(BM_CellsOfWLambda)->ArgsProduct({{0, 1, 2}, {6, 8, 10}})->Unit(benchmark::kMillisecond);

void BM_JRing(benchmark::State& state) {
  RootDatum d = build_root_datum(kTypes[state.range(0)], CaseFlag::B);
  LambdaGeometry g(d, Lambda::zero(d));
  StructureTable st(g, static_cast<int>(state.range(1)));
  for (auto _ : state) {
    JRing j(st);
    benchmark::DoNotOptimize(j.distinguished().size());
  }
}
BENCHMARK(BM_JRing)->ArgsProduct({{0, 1, 2}, {6, 8}})->Unit(benchmark::kMillisecond);

void BM_OrbitHeckeKL(benchmark::State& state) {
  RootDatum d = build_root_datum("A2", CaseFlag::A);
  Lambda lambda = Lambda::parse(d, {"1/2", "0"});
  for (auto _ : state) {
    OrbitHecke h(d, lambda, static_cast<int>(state.range(0)));
    for (int lam = 0; lam < h.orbit_size(); ++lam)
      for (int w = 0; w < h.weyl().size(); ++w) benchmark::DoNotOptimize(h.kl_basis_element({w, lam}));
  }
}
BENCHMARK(BM_OrbitHeckeKL)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorem(benchmark::State& state) {
  RootDatum d = build_root_datum(kTypes[state.range(0)], CaseFlag::B);
  for (auto _ : state) {
    VerificationReport r = verify_theorem(d, Lambda::zero(d), 10);
    benchmark::DoNotOptimize(r.pass());
  }
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
