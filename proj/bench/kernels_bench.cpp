// Serial vs OpenMP versions of each kernel, on the same inputs.
#include <benchmark/benchmark.h>

#include "ordcomp/corpus.hpp"
#include "ordcomp/dlat.hpp"
#include "ordcomp/finite.hpp"
#include "ordcomp/kernels.hpp"
#include "ordcomp/rng.hpp"
#include "ordcomp/suite.hpp"

namespace {

using namespace ordcomp;

FinPoset poset_for(int n) {
  Rng rng(0x5eed + n);
  return random_poset(rng, n);
}

FinDLat lattice_for(int n) {
  FinPoset p = poset_for(n);
  std::vector<Bits> rows;
  for (int i = 0; i < p.n; ++i) {
    Bits b(p.n);
    for (int j = 0; j < p.n; ++j)
      if (p.leq(i, j)) b.set(j);
    rows.push_back(std::move(b));
  }
  return upset_lattice(rows);
}

template <auto Scan>
void prime_filters(benchmark::State& st) {
  FinDLat d = lattice_for(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Scan(d));
  st.counters["elements"] = d.size();
}

template <auto Maps>
void monotone(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  FinPoset from = poset_for(n), to = poset_for(n + 1);
  std::vector<int> fixed(n, -1);
  for (auto _ : st) benchmark::DoNotOptimize(Maps(from, to, fixed));
}

template <auto Scan>
void bases(benchmark::State& st) {
  FinPoset p = FinPoset::chain(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Scan(p));
}

template <auto Suite>
void suite(benchmark::State& st) {
  Corpus c = builtin_corpus(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Suite(c, SweepConfig{}));
}

}  // namespace

BENCHMARK(prime_filters<kernels::prime_filter_scan_serial>)->Arg(4)->Arg(5);
BENCHMARK(prime_filters<kernels::prime_filter_scan_parallel>)->Arg(4)->Arg(5);
BENCHMARK(monotone<kernels::monotone_maps_serial>)->Arg(4)->Arg(5);
BENCHMARK(monotone<kernels::monotone_maps_parallel>)->Arg(4)->Arg(5);
BENCHMARK(bases<kernels::priestley_basis_scan_serial>)->Arg(3)->Arg(4);
BENCHMARK(bases<kernels::priestley_basis_scan_parallel>)->Arg(3)->Arg(4);
BENCHMARK(suite<theorem_suite_serial>)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(suite<theorem_suite>)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
