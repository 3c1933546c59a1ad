#include <benchmark/benchmark.h>

#include "posetahedra/affine.hpp"
#include "posetahedra/compactification.hpp"
#include "posetahedra/corpus.hpp"
#include "posetahedra/realization.hpp"

namespace pt = posetahedra;

namespace {

void BM_EnumerateTubesChain(benchmark::State& state) {
  pt::Poset p = pt::corpus::chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pt::enumerate_tubes(p, true));
}
BENCHMARK(BM_EnumerateTubesChain)->DenseRange(4, 10, 2);

void BM_ProperTubingsClaw(benchmark::State& state) {
  pt::Poset p = pt::corpus::claw(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pt::enumerate_proper_tubings(p, false));
}
BENCHMARK(BM_ProperTubingsClaw)->DenseRange(3, 6);

void BM_AssociahedronLattice(benchmark::State& state) {
  pt::Poset p = pt::corpus::chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pt::associahedron_face_lattice(p));
}
BENCHMARK(BM_AssociahedronLattice)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_RealizeChain(benchmark::State& state) {
  pt::Poset p = pt::corpus::chain(static_cast<std::size_t>(state.range(0)));
  std::size_t bits = 0;
  for (auto _ : state) bits = pt::realize_poset_associahedron(p).max_bits;
  state.counters["max_bits"] = static_cast<double>(bits);
}
BENCHMARK(BM_RealizeChain)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_RealizeClaw(benchmark::State& state) {
  pt::Poset p = pt::corpus::claw(static_cast<std::size_t>(state.range(0)));
  std::size_t bits = 0;
  for (auto _ : state) bits = pt::realize_poset_associahedron(p).max_bits;
  state.counters["max_bits"] = static_cast<double>(bits);
}
BENCHMARK(BM_RealizeClaw)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CyclohedronLattice(benchmark::State& state) {
  pt::AffinePoset a = pt::corpus::circular_claw(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pt::cyclohedron_face_lattice(a));
}
BENCHMARK(BM_CyclohedronLattice)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RealizeCyclohedron(benchmark::State& state) {
  pt::AffinePoset a = pt::corpus::circular_chain(static_cast<std::size_t>(state.range(0)));
  std::size_t bits = 0;
  for (auto _ : state) bits = pt::realize_affine_cyclohedron(a).max_bits;
  state.counters["max_bits"] = static_cast<double>(bits);
}
BENCHMARK(BM_RealizeCyclohedron)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SynthesizeExpandCollapse(benchmark::State& state) {
  pt::Poset p = pt::corpus::w5();
  auto tubings = pt::enumerate_proper_tubings(p, true);
  for (auto _ : state) {
    for (const auto& t : tubings) {
      pt::ConfigPoint c = pt::synthesize(p, t, pt::canonical_interior(p, t));
      pt::TubingTree tree(p, t);
      pt::Tube inner = t.front();
      pt::ConfigPoint y = pt::expand(p, c, inner, tree.parent(inner), pt::Rational(1, 1000));
      benchmark::DoNotOptimize(pt::collapse(p, y, inner, tree.parent(inner)));
    }
  }
}
BENCHMARK(BM_SynthesizeExpandCollapse)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
