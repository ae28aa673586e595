#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfs/textnorm.h"

namespace qfs {

enum class RougeVariant { R1, R2, RL, RSU4 };

inline constexpr std::array<RougeVariant, 4> kAllRougeVariants = {RougeVariant::R1, RougeVariant::R2,
                                                                  RougeVariant::RL, RougeVariant::RSU4};

const char* to_string(RougeVariant variant);
RougeVariant parse_rouge_variant(std::string_view text);

struct RougeScore {
  RougeVariant variant = RougeVariant::R1;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// 2PR / (P + R), or 0 when P + R == 0.
double harmonic_f1(double precision, double recall);

RougeScore rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference, int n);
RougeScore rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference);
// Skip-bigrams with gap 1..4 plus one (begin-marker, token) pair per token.
RougeScore rouge_su4(std::span<const std::string> candidate, std::span<const std::string> reference);
RougeScore rouge(RougeVariant variant, std::span<const std::string> candidate,
                 std::span<const std::string> reference);

// Length of the longest common subsequence.
std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

// Text preparation for ROUGE: tokenize + lowercase + edge punctuation
// stripping; stopwords kept and no stemming unless asked for.
struct RougeOptions {
  bool stemming = false;
  bool remove_stopwords = false;
  std::shared_ptr<const StopwordList> stopwords = StopwordList::bundled();
};

std::vector<std::string> rouge_tokens(std::string_view text, const RougeOptions& options = {});

struct SampleRouge {
  std::string sample_id;
  std::vector<RougeScore> scores;  // one per requested variant, same order
};

struct CorpusRouge {
  std::vector<RougeVariant> variants;
  std::vector<RougeScore> mean;  // macro-average, same order as variants
  std::vector<SampleRouge> per_sample;
};

struct SummaryPair {
  std::string sample_id;
  std::string candidate;
  std::string reference;
};

// Per-pair scores averaged arithmetically. Throws data_error on an empty
// pair list. Parallel over pairs; the aggregation order is fixed.
CorpusRouge corpus_rouge(std::span<const SummaryPair> pairs, std::span<const RougeVariant> variants,
                         const RougeOptions& options = {}, int jobs = 0);

// Macro-average of already computed per-sample scores.
std::vector<RougeScore> mean_scores(std::span<const SampleRouge> per_sample, std::span<const RougeVariant> variants);

// {"R1": {"precision": p, "recall": r, "f1": f}, ...}
std::string serialize_rouge_report(const CorpusRouge& result);
// One {"sample_id", "R1": {...}, ...} line per sample.
std::string serialize_rouge_audit(const CorpusRouge& result);

}  // namespace qfs
