#include "kernels_detail.h"
#include "qfs/parallel.h"

namespace qfs::parallel {

std::vector<EvidenceQuery> extract_evidence_batch(const Corpus& corpus, std::size_t cap, const NormalizerConfig& norm,
                                                  int jobs) {
  return parallel_map(corpus.samples.size(), jobs,
                      [&](std::size_t i) { return detail::evidence_for(corpus.samples[i], cap, norm); });
}

std::vector<EvidenceQuery> generate_queries_batch(const Corpus& corpus, std::size_t cap, const DfTable& df,
                                                  const NormalizerConfig& norm, int jobs) {
  return parallel_map(corpus.samples.size(), jobs,
                      [&](std::size_t i) { return detail::generated_for(corpus.samples[i], cap, df, norm); });
}

std::vector<RankedDocument> rank_batch(const Corpus& corpus, std::span<const EvidenceQuery> queries,
                                       const EmbeddingProvider& provider, const NormalizerConfig& norm, int jobs) {
  detail::check_aligned(corpus, queries);
  return parallel_map(corpus.samples.size(), jobs, [&](std::size_t i) {
    return detail::ranked_for(corpus.samples[i], queries[i], provider, norm);
  });
}

std::vector<SampleRouge> score_pairs_batch(std::span<const SummaryPair> pairs, std::span<const RougeVariant> variants,
                                           const RougeOptions& options, int jobs) {
  return parallel_map(pairs.size(), jobs, [&](std::size_t i) { return detail::scored(pairs[i], variants, options); });
}

std::vector<double> query_similarity_batch(std::span<const QueryPair> pairs, const EmbeddingProvider& provider,
                                           int jobs) {
  return parallel_map(pairs.size(), jobs, [&](std::size_t i) { return detail::similarity_for(pairs[i], provider); });
}

}  // namespace qfs::parallel
