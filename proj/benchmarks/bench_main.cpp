#include <benchmark/benchmark.h>

#include "aslkit/enumerate.hpp"
#include "aslkit/realization.hpp"
#include "aslkit/uniqueness.hpp"

using namespace aslkit;

namespace {

Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return build_poset(labels, {});
}

Poset grid(std::size_t rows, std::size_t cols) {
  std::vector<std::string> labels;
  std::vector<LabelCover> covers;
  auto name = [](std::size_t r, std::size_t c) {
    return "g" + std::to_string(r) + "_" + std::to_string(c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      labels.push_back(name(r, c));
      if (r) covers.emplace_back(name(r - 1, c), name(r, c));
      if (c) covers.emplace_back(name(r, c - 1), name(r, c));
    }
  }
  return build_poset(labels, covers);
}

void BM_IdealsAntichain(benchmark::State& state) {
  const Poset p = antichain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(IdealLattice(p).size());
  state.SetComplexityN(std::int64_t{1} << state.range(0));
}
BENCHMARK(BM_IdealsAntichain)->DenseRange(8, 18, 2)->Complexity(benchmark::oN);

void BM_IdealsGrid(benchmark::State& state) {
  const Poset p = grid(4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(IdealLattice(p).size());
}
BENCHMARK(BM_IdealsGrid)->DenseRange(2, 8, 2);

void BM_GeneratePosets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_posets(n).size());
}
BENCHMARK(BM_GeneratePosets)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_CorpusVerify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(corpus_verify({.max_n = n}).ok());
}
BENCHMARK(BM_CorpusVerify)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_CertificateAntichain(benchmark::State& state) {
  const IdealLattice l(antichain(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    const auto cert = uniqueness_certificate(l);
    benchmark::DoNotOptimize(validate_certificate(l.poset(), cert).accepted);
  }
}
BENCHMARK(BM_CertificateAntichain)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SearchAntichain(benchmark::State& state) {
  const IdealLattice l(antichain(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(search_compatible_asls(l).nodes);
}
BENCHMARK(BM_SearchAntichain)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
