#include "kernels_detail.h"

namespace qfs::serial {

std::vector<EvidenceQuery> extract_evidence_batch(const Corpus& corpus, std::size_t cap, const NormalizerConfig& norm) {
  std::vector<EvidenceQuery> out;
  out.reserve(corpus.samples.size());
  for (const CorpusSample& s : corpus.samples) out.push_back(detail::evidence_for(s, cap, norm));
  return out;
}

std::vector<EvidenceQuery> generate_queries_batch(const Corpus& corpus, std::size_t cap, const DfTable& df,
                                                  const NormalizerConfig& norm) {
  std::vector<EvidenceQuery> out;
  out.reserve(corpus.samples.size());
  for (const CorpusSample& s : corpus.samples) out.push_back(detail::generated_for(s, cap, df, norm));
  return out;
}

std::vector<RankedDocument> rank_batch(const Corpus& corpus, std::span<const EvidenceQuery> queries,
                                       const EmbeddingProvider& provider, const NormalizerConfig& norm) {
  detail::check_aligned(corpus, queries);
  std::vector<RankedDocument> out;
  out.reserve(corpus.samples.size());
  for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
    out.push_back(detail::ranked_for(corpus.samples[i], queries[i], provider, norm));
  }
  return out;
}

std::vector<SampleRouge> score_pairs_batch(std::span<const SummaryPair> pairs, std::span<const RougeVariant> variants,
                                           const RougeOptions& options) {
  std::vector<SampleRouge> out;
  out.reserve(pairs.size());
  for (const SummaryPair& p : pairs) out.push_back(detail::scored(p, variants, options));
  return out;
}

std::vector<double> query_similarity_batch(std::span<const QueryPair> pairs, const EmbeddingProvider& provider) {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const QueryPair& p : pairs) out.push_back(detail::similarity_for(p, provider));
  return out;
}

}  // namespace qfs::serial
