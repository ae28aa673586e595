#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfs/config.h"
#include "qfs/corpus.h"
#include "qfs/evidence.h"
#include "qfs/rank.h"
#include "qfs/rouge.h"

namespace qfs {

struct IntrinsicReport {
  std::string corpus_name;
  std::vector<std::pair<std::string, double>> per_sample;
  double mean_similarity = 0.0;
  std::string provider_descriptor;
  std::size_t excluded = 0;  // samples with an original query but no evidence query
  std::string config_digest;
};

// Cosine between the mean vectors of each sample's normalized original query
// and its evidence keywords (re-normalized with the same settings), then the
// arithmetic mean over samples that have both.
IntrinsicReport intrinsic_similarity(const Corpus& corpus, const std::vector<EvidenceQuery>& queries,
                                     const PipelineContext& ctx, int jobs = 0);

std::string serialize_intrinsic(const IntrinsicReport& report);

enum class SummarizerKind { extractive, bridge_file };

struct SummarizerSpec {
  SummarizerKind kind = SummarizerKind::extractive;
  std::size_t k = 2;
  std::map<std::string, std::string> bridge_summaries;  // sample_id -> generated summary

  std::string descriptor() const;
};

// JSONL {"sample_id", "summary"}; duplicate ids are a data error.
std::map<std::string, std::string> load_bridge_summaries(const std::string& path);

// Observers used by tests to check that a run only touches the queries of
// its own mode.
struct ExtrinsicHooks {
  std::function<void(const std::string& sample_id)> on_original_query_read;
  std::function<void(const std::string& sample_id)> on_evidence_query_read;
};

struct ExtrinsicRequest {
  QueryMode mode = QueryMode::evidence;
  // Evidence mode only. When null, queries come from the document-only
  // generator over the corpus; gold summaries are never used for queries.
  const std::vector<EvidenceQuery>* evidence_queries = nullptr;
  // Precomputed ranking (for example a `rank` output file). When null the
  // corpus is ranked here.
  const std::vector<RankedDocument>* ranked = nullptr;
  SummarizerSpec summarizer;
  ExtrinsicHooks hooks;
};

struct ExtrinsicReport {
  std::string corpus_name;
  QueryMode query_mode = QueryMode::evidence;
  std::string summarizer;
  std::string config_digest;
  CorpusRouge rouge;
};

// Queries for the requested mode, aligned with corpus.samples.
std::vector<EvidenceQuery> resolve_queries(const Corpus& corpus, const ExtrinsicRequest& request,
                                           const PipelineContext& ctx, int jobs = 0);

ExtrinsicReport run_extrinsic(const Corpus& corpus, const ExtrinsicRequest& request, const PipelineContext& ctx,
                              int jobs = 0);

std::string serialize_extrinsic(const ExtrinsicReport& report);

// Looks up each sample's entry in `items` by sample_id; throws data_error
// listing every missing id.
template <typename T, typename IdOf>
std::vector<const T*> align_by_id(const Corpus& corpus, const std::vector<T>& items, IdOf id_of,
                                  const std::string& what);

}  // namespace qfs

#include "qfs/evalsuite_inl.h"
