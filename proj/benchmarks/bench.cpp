#include <benchmark/benchmark.h>

#include <random>

#include "fvslab/bounds.hpp"
#include "fvslab/codec.hpp"
#include "fvslab/constructions.hpp"
#include "fvslab/fvs.hpp"
#include "fvslab/orderings.hpp"

using namespace fvslab;

namespace {

Digraph random_kdeg_digraph(int n, int k, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> arcs;
  for (int p = 1; p < n; ++p) {
    int want = std::uniform_int_distribution<int>(0, std::min(k, p))(rng);
    std::vector<int> earlier(p);
    for (int i = 0; i < p; ++i) earlier[i] = i;
    std::shuffle(earlier.begin(), earlier.end(), rng);
    for (int i = 0; i < want; ++i) {
      if (rng() & 1)
        arcs.emplace_back(earlier[i], p);
      else
        arcs.emplace_back(p, earlier[i]);
    }
  }
  return Digraph(n, arcs);
}

void BM_solver_fixtures(benchmark::State& state) {
  const PublishedBlock& b = builtin_blocks()[static_cast<size_t>(state.range(0))];
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_fvs(b.graph).size());
  }
}
BENCHMARK(BM_solver_fixtures)->DenseRange(0, 4);

void BM_solver_family_member(benchmark::State& state) {
  const PublishedBlock& c = builtin_blocks()[2];
  Block<Digraph> blk{c.graph, c.R, c.r_prime, c.f, true, std::nullopt, std::nullopt};
  Digraph member = iterate_block(blk, 1).graph;  // 23 vertices
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_fvs(member).size());
  }
}
BENCHMARK(BM_solver_family_member);

void BM_degeneracy(benchmark::State& state) {
  Digraph d = random_kdeg_digraph(static_cast<int>(state.range(0)), 6, 11);
  Graph u = underlying(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(degeneracy(u).value);
  }
}
BENCHMARK(BM_degeneracy)->Arg(64)->Arg(256)->Arg(1024);

void BM_treewidth_exact(benchmark::State& state) {
  Digraph d = random_kdeg_digraph(static_cast<int>(state.range(0)), 3, 17);
  Graph u = underlying(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(treewidth_exact(u).value);
  }
}
BENCHMARK(BM_treewidth_exact)->Arg(12)->Arg(16)->Arg(18);

void BM_degdir_fvs(benchmark::State& state) {
  Digraph d = random_kdeg_digraph(static_cast<int>(state.range(0)), 4, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(degdir_fvs(d, 4).size());
  }
}
BENCHMARK(BM_degdir_fvs)->Arg(40)->Arg(80);

void BM_codec_roundtrip(benchmark::State& state) {
  Digraph d = random_kdeg_digraph(60, 8, 29);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode_digraph6(encode_digraph6(d)).order());
  }
}
BENCHMARK(BM_codec_roundtrip);

void BM_tournament_a7(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tournament_a(7).value);
  }
}
BENCHMARK(BM_tournament_a7);

}  // namespace

BENCHMARK_MAIN();
