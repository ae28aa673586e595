#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qfs/corpus.h"
#include "qfs/textnorm.h"

namespace qfs {

inline constexpr std::size_t kDefaultEvidenceCap = 6;

// `original` marks a dataset query passed through the same ranking path.
enum class QuerySource { pair_oracle, document_only, bridge_generated, original };

const char* to_string(QuerySource source);
QuerySource parse_query_source(std::string_view text);

struct EvidenceQuery {
  std::string sample_id;
  std::vector<std::string> keywords;
  QuerySource source = QuerySource::pair_oracle;

  // Keywords joined by single spaces.
  std::string text() const;
  bool operator==(const EvidenceQuery&) const = default;
};

// Evidence keywords: normalized content tokens present in both texts,
// deduplicated, in order of first occurrence in the document, at most `cap`.
// An empty intersection yields an empty keyword list.
EvidenceQuery extract_evidence(std::string_view document, std::string_view summary, std::size_t cap,
                               const NormalizerConfig& norm = {});

// Document frequencies of content norms over a corpus of documents.
class DfTable {
 public:
  DfTable() = default;

  void add_document(const std::vector<std::string>& content_norms);
  std::size_t document_count() const { return documents_; }
  std::size_t df(const std::string& norm) const;
  // Smoothed idf: ln((N + 1) / (df + 1)) + 1. Strictly positive.
  double idf(const std::string& norm) const;

  static DfTable build(const Corpus& corpus, const NormalizerConfig& norm);

 private:
  std::size_t documents_ = 0;
  std::unordered_map<std::string, std::size_t> df_;
};

// Query-free generator: ranks distinct content tokens by tf * idf, keeps the
// best `cap` (ties: higher score, then earlier first occurrence, then
// lexicographic) and returns them in document order.
EvidenceQuery generate_query_document_only(std::string_view document, std::size_t cap, const DfTable& df,
                                           const NormalizerConfig& norm = {});

struct TrainingPair {
  std::string sample_id;
  std::string document;
  std::string evidence;
};

struct TrainingExport {
  std::vector<TrainingPair> records;
  std::size_t skipped = 0;
};

// Evidence/document pairs for fine-tuning an evidence generator. Samples
// whose evidence is empty are skipped and counted. `jobs` bounds the worker
// count; the record order is always the corpus order.
TrainingExport export_training_pairs(const Corpus& corpus, std::size_t cap, const NormalizerConfig& norm = {},
                                     int jobs = 0);

// JSONL {"sample_id", "document", "evidence"} per record.
std::string serialize_training_pairs(const std::vector<TrainingPair>& records);

// Queries JSONL. Written as {"sample_id", "query": [...], "source": ...}.
// Reading also accepts {"sample_id", "evidence": "space separated"} lines as
// produced by extract-evidence and the bridge; those take `fallback_source`.
std::string serialize_queries(const std::vector<EvidenceQuery>& queries);
std::vector<EvidenceQuery> parse_queries(std::string_view jsonl, QuerySource fallback_source,
                                         const std::string& origin = "<memory>");
std::vector<EvidenceQuery> load_queries(const std::string& path,
                                        QuerySource fallback_source = QuerySource::bridge_generated);

}  // namespace qfs
