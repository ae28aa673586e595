#pragma once

// Corpus-level batch kernels. Each kernel exists twice: an OpenMP version in
// qfs::parallel used by the library and the CLI, and a plain loop in
// qfs::serial kept as the reference the parallel one is tested and
// benchmarked against. Both return results in input order.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qfs/corpus.h"
#include "qfs/embed.h"
#include "qfs/evidence.h"
#include "qfs/rank.h"
#include "qfs/rouge.h"
#include "qfs/textnorm.h"

namespace qfs {

// Token lists compared by the intrinsic evaluation.
struct QueryPair {
  std::vector<std::string> original;
  std::vector<std::string> evidence;
};

namespace parallel {

// Pair-oracle evidence for every sample (summary required).
std::vector<EvidenceQuery> extract_evidence_batch(const Corpus& corpus, std::size_t cap, const NormalizerConfig& norm,
                                                  int jobs);
std::vector<EvidenceQuery> generate_queries_batch(const Corpus& corpus, std::size_t cap, const DfTable& df,
                                                  const NormalizerConfig& norm, int jobs);
// queries[i] is the query for corpus.samples[i].
std::vector<RankedDocument> rank_batch(const Corpus& corpus, std::span<const EvidenceQuery> queries,
                                       const EmbeddingProvider& provider, const NormalizerConfig& norm, int jobs);
std::vector<SampleRouge> score_pairs_batch(std::span<const SummaryPair> pairs, std::span<const RougeVariant> variants,
                                           const RougeOptions& options, int jobs);
std::vector<double> query_similarity_batch(std::span<const QueryPair> pairs, const EmbeddingProvider& provider,
                                           int jobs);

}  // namespace parallel

namespace serial {

std::vector<EvidenceQuery> extract_evidence_batch(const Corpus& corpus, std::size_t cap, const NormalizerConfig& norm);
std::vector<EvidenceQuery> generate_queries_batch(const Corpus& corpus, std::size_t cap, const DfTable& df,
                                                  const NormalizerConfig& norm);
std::vector<RankedDocument> rank_batch(const Corpus& corpus, std::span<const EvidenceQuery> queries,
                                       const EmbeddingProvider& provider, const NormalizerConfig& norm);
std::vector<SampleRouge> score_pairs_batch(std::span<const SummaryPair> pairs, std::span<const RougeVariant> variants,
                                           const RougeOptions& options);
std::vector<double> query_similarity_batch(std::span<const QueryPair> pairs, const EmbeddingProvider& provider);

}  // namespace serial

}  // namespace qfs
