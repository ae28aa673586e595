// Serial reference kernels against their OpenMP versions over a generated
// corpus. Argument: number of samples.

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "qfs/kernels.h"
#include "support/gen.h"

namespace {

qfs::Corpus make_corpus(std::size_t n) {
  std::mt19937_64 rng(42);
  qfs::Corpus c;
  c.kind = qfs::CorpusKind::triad;
  for (std::size_t i = 0; i < n; ++i) {
    c.samples.push_back({"s" + std::to_string(i), {}, gen::document(rng, 10, 30), gen::document(rng, 1, 3),
                         gen::sentence(rng)});
  }
  return c;
}

const qfs::Corpus& corpus(std::size_t n) {
  static std::map<std::size_t, qfs::Corpus> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_corpus(n)).first;
  return it->second;
}

const qfs::NormalizerConfig kNorm;
const auto kProvider = qfs::EmbeddingProvider::hash_fallback(64, 7);

std::vector<qfs::SummaryPair> pairs_of(const qfs::Corpus& c) {
  std::vector<qfs::SummaryPair> out;
  for (const auto& s : c.samples) out.push_back({s.sample_id, s.document, *s.summary});
  return out;
}

void bm_evidence_serial(benchmark::State& state) {
  const auto& c = corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfs::serial::extract_evidence_batch(c, 6, kNorm));
}

void bm_evidence_parallel(benchmark::State& state) {
  const auto& c = corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfs::parallel::extract_evidence_batch(c, 6, kNorm, 0));
}

void bm_rank_serial(benchmark::State& state) {
  const auto& c = corpus(state.range(0));
  const auto queries = qfs::serial::extract_evidence_batch(c, 6, kNorm);
  for (auto _ : state) benchmark::DoNotOptimize(qfs::serial::rank_batch(c, queries, kProvider, kNorm));
}

void bm_rank_parallel(benchmark::State& state) {
  const auto& c = corpus(state.range(0));
  const auto queries = qfs::serial::extract_evidence_batch(c, 6, kNorm);
  for (auto _ : state) benchmark::DoNotOptimize(qfs::parallel::rank_batch(c, queries, kProvider, kNorm, 0));
}

void bm_rouge_serial(benchmark::State& state) {
  const auto pairs = pairs_of(corpus(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfs::serial::score_pairs_batch(pairs, qfs::kAllRougeVariants, {}));
  }
}

void bm_rouge_parallel(benchmark::State& state) {
  const auto pairs = pairs_of(corpus(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfs::parallel::score_pairs_batch(pairs, qfs::kAllRougeVariants, {}, 0));
  }
}

}  // namespace

BENCHMARK(bm_evidence_serial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_evidence_parallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rank_serial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rank_parallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rouge_serial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rouge_parallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
