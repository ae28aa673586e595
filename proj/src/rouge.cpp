#include "qfs/rouge.h"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "json.hpp"
#include "qfs/error.h"
#include "qfs/kernels.h"

namespace qfs {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kMaxSkip = 4;

RougeScore from_counts(RougeVariant variant, std::size_t overlap, std::size_t candidate_total,
                       std::size_t reference_total) {
  RougeScore s;
  s.variant = variant;
  if (candidate_total == 0 || reference_total == 0) return s;
  s.precision = static_cast<double>(overlap) / static_cast<double>(candidate_total);
  s.recall = static_cast<double>(overlap) / static_cast<double>(reference_total);
  s.f1 = harmonic_f1(s.precision, s.recall);
  return s;
}

// Interns tokens of both sides into dense ids; id 0 is reserved for the
// skip-bigram begin marker so it never collides with a real token.
struct Interned {
  std::vector<std::uint32_t> candidate;
  std::vector<std::uint32_t> reference;
};

Interned intern(std::span<const std::string> candidate, std::span<const std::string> reference) {
  std::unordered_map<std::string_view, std::uint32_t> ids;
  const auto id_of = [&](const std::string& t) {
    const auto [it, inserted] = ids.emplace(t, static_cast<std::uint32_t>(ids.size() + 1));
    return it->second;
  };
  Interned out;
  out.candidate.reserve(candidate.size());
  out.reference.reserve(reference.size());
  for (const std::string& t : candidate) out.candidate.push_back(id_of(t));
  for (const std::string& t : reference) out.reference.push_back(id_of(t));
  return out;
}

using GramCounts = std::unordered_map<std::uint64_t, std::size_t>;

std::uint64_t pack(std::uint32_t a, std::uint32_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

std::size_t clipped_overlap(const GramCounts& candidate, const GramCounts& reference) {
  std::size_t overlap = 0;
  for (const auto& [gram, count] : candidate) {
    const auto it = reference.find(gram);
    if (it != reference.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

std::size_t ngram_counts(const std::vector<std::uint32_t>& ids, int n, GramCounts& counts) {
  if (ids.size() < static_cast<std::size_t>(n)) return 0;
  const std::size_t total = ids.size() - static_cast<std::size_t>(n) + 1;
  for (std::size_t i = 0; i < total; ++i) {
    ++counts[n == 1 ? pack(0, ids[i]) : pack(ids[i], ids[i + 1])];
  }
  return total;
}

std::size_t skip_bigram_counts(const std::vector<std::uint32_t>& ids, GramCounts& counts) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ++counts[pack(0, ids[i])];
    ++total;
    for (std::size_t j = i + 1; j < ids.size() && j - i <= kMaxSkip; ++j) {
      ++counts[pack(ids[i], ids[j])];
      ++total;
    }
  }
  return total;
}

ordered_json score_json(const RougeScore& s) {
  ordered_json obj;
  obj["precision"] = s.precision;
  obj["recall"] = s.recall;
  obj["f1"] = s.f1;
  return obj;
}

}  // namespace

const char* to_string(RougeVariant variant) {
  switch (variant) {
    case RougeVariant::R1:
      return "R1";
    case RougeVariant::R2:
      return "R2";
    case RougeVariant::RL:
      return "RL";
    case RougeVariant::RSU4:
      return "RSU4";
  }
  return "R1";
}

RougeVariant parse_rouge_variant(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  upper.erase(std::remove(upper.begin(), upper.end(), '-'), upper.end());
  if (upper == "R1" || upper == "ROUGE1") return RougeVariant::R1;
  if (upper == "R2" || upper == "ROUGE2") return RougeVariant::R2;
  if (upper == "RL" || upper == "ROUGEL") return RougeVariant::RL;
  if (upper == "RSU4" || upper == "ROUGESU4") return RougeVariant::RSU4;
  throw usage_error("unknown ROUGE variant '" + std::string(text) + "'");
}

double harmonic_f1(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

RougeScore rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference, int n) {
  if (n != 1 && n != 2) throw usage_error("rouge_n supports n = 1 or 2");
  const RougeVariant variant = n == 1 ? RougeVariant::R1 : RougeVariant::R2;
  const Interned ids = intern(candidate, reference);
  GramCounts cand;
  GramCounts ref;
  const std::size_t cand_total = ngram_counts(ids.candidate, n, cand);
  const std::size_t ref_total = ngram_counts(ids.reference, n, ref);
  return from_counts(variant, clipped_overlap(cand, ref), cand_total, ref_total);
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  const Interned ids = intern(a, b);
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = ids.candidate[i - 1] == ids.reference[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeScore rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
  return from_counts(RougeVariant::RL, lcs_length(candidate, reference), candidate.size(), reference.size());
}

RougeScore rouge_su4(std::span<const std::string> candidate, std::span<const std::string> reference) {
  const Interned ids = intern(candidate, reference);
  GramCounts cand;
  GramCounts ref;
  const std::size_t cand_total = skip_bigram_counts(ids.candidate, cand);
  const std::size_t ref_total = skip_bigram_counts(ids.reference, ref);
  return from_counts(RougeVariant::RSU4, clipped_overlap(cand, ref), cand_total, ref_total);
}

RougeScore rouge(RougeVariant variant, std::span<const std::string> candidate,
                 std::span<const std::string> reference) {
  switch (variant) {
    case RougeVariant::R1:
      return rouge_n(candidate, reference, 1);
    case RougeVariant::R2:
      return rouge_n(candidate, reference, 2);
    case RougeVariant::RL:
      return rouge_l(candidate, reference);
    case RougeVariant::RSU4:
      return rouge_su4(candidate, reference);
  }
  return {};
}

std::vector<std::string> rouge_tokens(std::string_view text, const RougeOptions& options) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(text)) {
    if (options.remove_stopwords && options.stopwords && options.stopwords->contains(t.norm)) continue;
    out.push_back(options.stemming ? light_stem(t.norm) : t.norm);
  }
  return out;
}

std::vector<RougeScore> mean_scores(std::span<const SampleRouge> per_sample, std::span<const RougeVariant> variants) {
  std::vector<RougeScore> mean(variants.size());
  for (std::size_t v = 0; v < variants.size(); ++v) mean[v].variant = variants[v];
  if (per_sample.empty()) return mean;
  for (const SampleRouge& s : per_sample) {
    for (std::size_t v = 0; v < variants.size(); ++v) {
      mean[v].precision += s.scores[v].precision;
      mean[v].recall += s.scores[v].recall;
      mean[v].f1 += s.scores[v].f1;
    }
  }
  const double n = static_cast<double>(per_sample.size());
  for (RougeScore& m : mean) {
    m.precision /= n;
    m.recall /= n;
    m.f1 /= n;
  }
  return mean;
}

CorpusRouge corpus_rouge(std::span<const SummaryPair> pairs, std::span<const RougeVariant> variants,
                         const RougeOptions& options, int jobs) {
  if (pairs.empty()) throw data_error("corpus ROUGE needs at least one (candidate, reference) pair");
  if (variants.empty()) throw usage_error("no ROUGE variants requested");
  CorpusRouge result;
  result.variants.assign(variants.begin(), variants.end());
  result.per_sample = parallel::score_pairs_batch(pairs, variants, options, jobs);
  result.mean = mean_scores(result.per_sample, variants);
  return result;
}

std::string serialize_rouge_report(const CorpusRouge& result) {
  ordered_json obj;
  for (const RougeScore& m : result.mean) obj[to_string(m.variant)] = score_json(m);
  return obj.dump(2) + "\n";
}

std::string serialize_rouge_audit(const CorpusRouge& result) {
  std::string out;
  for (const SampleRouge& s : result.per_sample) {
    ordered_json obj;
    obj["sample_id"] = s.sample_id;
    for (const RougeScore& score : s.scores) obj[to_string(score.variant)] = score_json(score);
    out += obj.dump(-1, ' ', false, ordered_json::error_handler_t::replace) + "\n";
  }
  return out;
}

}  // namespace qfs
