#pragma once

// Per-sample bodies shared by the parallel and serial kernels.

#include "qfs/error.h"
#include "qfs/kernels.h"

namespace qfs::detail {

inline EvidenceQuery evidence_for(const CorpusSample& s, std::size_t cap, const NormalizerConfig& norm) {
  if (!s.summary) throw data_error("sample '" + s.sample_id + "' has no summary for evidence extraction");
  EvidenceQuery q = extract_evidence(s.document, *s.summary, cap, norm);
  q.sample_id = s.sample_id;
  return q;
}

inline EvidenceQuery generated_for(const CorpusSample& s, std::size_t cap, const DfTable& df,
                                   const NormalizerConfig& norm) {
  EvidenceQuery q = generate_query_document_only(s.document, cap, df, norm);
  q.sample_id = s.sample_id;
  return q;
}

inline RankedDocument ranked_for(const CorpusSample& s, const EvidenceQuery& q, const EmbeddingProvider& provider,
                                 const NormalizerConfig& norm) {
  RankedDocument r = rank_sentences(s.document, q, provider, norm);
  r.sample_id = s.sample_id;
  return r;
}

inline SampleRouge scored(const SummaryPair& p, std::span<const RougeVariant> variants, const RougeOptions& options) {
  const std::vector<std::string> cand = rouge_tokens(p.candidate, options);
  const std::vector<std::string> ref = rouge_tokens(p.reference, options);
  SampleRouge out;
  out.sample_id = p.sample_id;
  for (RougeVariant v : variants) out.scores.push_back(rouge(v, cand, ref));
  return out;
}

inline double similarity_for(const QueryPair& p, const EmbeddingProvider& provider) {
  return cosine_similarity(embed_text(provider, p.original), embed_text(provider, p.evidence));
}

inline void check_aligned(const Corpus& corpus, std::span<const EvidenceQuery> queries) {
  if (queries.size() != corpus.samples.size()) {
    throw data_error("query count " + std::to_string(queries.size()) + " does not match corpus size " +
                     std::to_string(corpus.samples.size()));
  }
}

}  // namespace qfs::detail
