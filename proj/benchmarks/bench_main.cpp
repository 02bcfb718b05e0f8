#include <benchmark/benchmark.h>

#include "erec/kernel/code.hpp"
#include "erec/kernel/library.hpp"
#include "erec/kernel/machine.hpp"
#include "erec/kernel/program.hpp"
#include "erec/lfp/comp_oracle.hpp"
#include "erec/lfp/fixpoint.hpp"
#include "erec/lfp/universe_oracle.hpp"
#include "erec/realize/formula.hpp"
#include "erec/realize/realize.hpp"
#include "erec/universe/typecode.hpp"
#include "erec/universe/universe.hpp"
#include "erec/universe/vset.hpp"
#include "hf_oracle.hpp"
#include "random_codes.hpp"

using namespace erec;

namespace {

void BM_RandomProbes(benchmark::State& state) {
  testing::CodeGen gen(5);
  std::vector<std::pair<Nat, std::vector<Nat>>> probes;
  for (int i = 0; i < 256; ++i) {
    std::size_t k = gen.below(3);
    probes.emplace_back(gen.code(k, 3), gen.args(k));
  }
  Machine vm;
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [c, a] = probes[i++ % probes.size()];
    benchmark::DoNotOptimize(vm.apply(c, a, state.range(0)));
  }
}
BENCHMARK(BM_RandomProbes)->Arg(64)->Arg(1024);

void BM_EfunSearch(benchmark::State& state) {
  // least p with p == m, found after m + 1 probes
  Nat base = comp_code(2, cases_code(0), {const_code(2, 0), const_code(2, 1), proj_code(2, 0), proj_code(2, 1)});
  Nat e = efun_code(1, base);
  Machine vm;
  for (auto _ : state) benchmark::DoNotOptimize(vm.apply(e, {Nat(state.range(0))}, 1'000'000));
}
BENCHMARK(BM_EfunSearch)->Range(8, 512);

void BM_JetsVersusClauses(benchmark::State& state) {
  Machine vm(MachineOptions{.accelerate = state.range(0) != 0});
  for (auto _ : state) benchmark::DoNotOptimize(vm.apply(library().mul, {Nat(7), Nat(9)}, 1'000'000));
}
BENCHMARK(BM_JetsVersusClauses)->Arg(0)->Arg(1);

void BM_Fix(benchmark::State& state) {
  Nat body = compile(Term::if_eq(Term::arg(1), Term::lit(0), Term::lit(0),
                                 Term::succ(Term::apply(Term::arg(0), {Term::call(library().pred, {Term::arg(1)})}))),
                     2);
  Nat e = fix(body);
  Machine vm;
  for (auto _ : state) benchmark::DoNotOptimize(vm.apply(e, {Nat(state.range(0))}, 1'000'000));
}
BENCHMARK(BM_Fix)->Range(4, 256);

void BM_MemberSigma(benchmark::State& state) {
  auto t = testing::sigma_ty(testing::fin_ty(3), {testing::fin_ty(1), testing::fin_ty(2), testing::fin_ty(3)});
  for (auto _ : state) {
    Universe u;
    for (std::uint64_t x = 0; x < 32; ++x) benchmark::DoNotOptimize(u.member(x, t.code));
  }
}
BENCHMARK(BM_MemberSigma);

void BM_EqualitySearch(benchmark::State& state) {
  auto lits = testing::hf_literals(2, 3);
  for (auto _ : state) {
    Realizer r;
    for (const auto& a : lits)
      benchmark::DoNotOptimize(r.search(Formula::eq(SetTerm::literal(hf_to_v(a)), SetTerm::literal(hf_to_v(a)))));
  }
}
BENCHMARK(BM_EqualitySearch)->Unit(benchmark::kMillisecond);

void BM_ReflexivityCheck(benchmark::State& state) {
  Nat a = vnat(state.range(0));
  for (auto _ : state) {
    Universe u;
    Outcome r = u.apply(refl_code(), {a});
    benchmark::DoNotOptimize(u.member(r.value, gl(a, a)));
  }
}
BENCHMARK(BM_ReflexivityCheck)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_CompOracleLfp(benchmark::State& state) {
  CompOracle oracle(CompCarrierSpec{.codes = static_cast<std::size_t>(state.range(0)), .depth = 3, .values = 5});
  for (auto _ : state) benchmark::DoNotOptimize(iterate(oracle.op(), {.probes = 0}));
  state.counters["carrier"] = static_cast<double>(oracle.carrier_size());
}
BENCHMARK(BM_CompOracleLfp)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_UniverseOracleLfp(benchmark::State& state) {
  UniverseOracle oracle;
  for (auto _ : state) benchmark::DoNotOptimize(iterate(oracle.op(), {.probes = 0}));
}
BENCHMARK(BM_UniverseOracleLfp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
