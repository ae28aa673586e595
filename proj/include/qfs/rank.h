#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qfs/embed.h"
#include "qfs/evidence.h"
#include "qfs/textnorm.h"

namespace qfs {

struct RankedSentence {
  std::string text;
  std::size_t orig_index = 0;
  double similarity = 0.0;
  std::size_t token_count = 0;  // word-level tokens in text

  bool operator==(const RankedSentence&) const = default;
};

// Sentences of one document sorted by descending similarity to the query,
// ties in ascending original order.
struct RankedDocument {
  std::string sample_id;
  std::vector<std::string> query;
  std::vector<RankedSentence> entries;

  // Longest prefix of entries whose cumulative token count is <= budget.
  std::vector<RankedSentence> budget_view(std::size_t budget) const;

  bool operator==(const RankedDocument&) const = default;
};

// Ranks sentences against a precomputed query vector. A zero query vector
// gives every sentence similarity 0 and keeps the source order.
RankedDocument rank_sentences(std::string_view document, const TextVector& query_vector,
                              const EmbeddingProvider& provider, const NormalizerConfig& norm = {});

RankedDocument rank_sentences(std::string_view document, const EvidenceQuery& query,
                              const EmbeddingProvider& provider, const NormalizerConfig& norm = {});

inline constexpr std::string_view kQuerySeparator = "</q>";

// Concatenates ranked sentences in rank order, stopping before the first
// sentence that would push the word-token count past `budget`. If even the
// top sentence does not fit, it is cut after its `budget`-th token. With
// `query_prefix` the output starts with "<keywords> </q> ".
std::string build_model_input(const RankedDocument& ranked, const EvidenceQuery& query, std::size_t budget,
                              bool query_prefix);

// Top min(k, n) ranked sentences restored to document order, space-joined.
std::string extractive_summary(const RankedDocument& ranked, std::size_t k);

// {"sample_id", "query": [...], "ranked_sentences": [{"text", "orig_index", "sim"}]}
// plus "model_input" when `model_input` is non-null.
std::string serialize_ranked(const RankedDocument& ranked, const std::string* model_input = nullptr);
std::vector<RankedDocument> parse_ranked(std::string_view jsonl, const std::string& origin = "<memory>");

}  // namespace qfs
