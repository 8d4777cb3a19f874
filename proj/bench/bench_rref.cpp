// Parallel rref() against the serial reference rref_serial() on exact rational systems.
#include <benchmark/benchmark.h>

#include <random>

#include "liederiv/corpus.hpp"
#include "liederiv/derivations.hpp"
#include "liederiv/rref.hpp"

using namespace liederiv;

namespace {

const StructureAlgebra& tri_m2_total() {
  static const StructureAlgebra total = [] {
    for (const auto& inst : builtin_corpus())
      if (inst.name == "tri_m2_m2_m2") return build_trivial_extension(inst.algebra, *inst.module).total;
    return StructureAlgebra{};
  }();
  return total;
}

Matrix random_sparse(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng() % 4 == 0) m(r, c) = static_cast<long>(rng() % 5) - 2;
  return m;
}

template <RrefResult (*Kernel)(Matrix)>
void run(benchmark::State& state, const Matrix& m) {
  std::size_t rank = 0;
  for (auto _ : state) {
    rank = Kernel(m).rank();
    benchmark::DoNotOptimize(rank);
  }
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["rank"] = static_cast<double>(rank);
}

template <RrefResult (*Kernel)(Matrix)>
void BM_DerivationSystem(benchmark::State& state) {
  static const Matrix m = derivation_system(tri_m2_total());
  run<Kernel>(state, m);
}

template <RrefResult (*Kernel)(Matrix)>
void BM_LieDerivationSystem(benchmark::State& state) {
  static const Matrix m = lie_derivation_system(tri_m2_total());
  run<Kernel>(state, m);
}

template <RrefResult (*Kernel)(Matrix)>
void BM_RandomSparse(benchmark::State& state) {
  run<Kernel>(state, random_sparse(static_cast<std::size_t>(state.range(0)), 7));
}

}  // namespace

BENCHMARK(BM_DerivationSystem<rref>)->Name("derivation_system/tri_m2/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerivationSystem<rref_serial>)->Name("derivation_system/tri_m2/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LieDerivationSystem<rref>)->Name("lie_system/tri_m2/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LieDerivationSystem<rref_serial>)->Name("lie_system/tri_m2/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSparse<rref>)->Name("random_sparse/parallel")->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSparse<rref_serial>)->Name("random_sparse/serial")->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
