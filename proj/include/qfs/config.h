#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfs/embed.h"
#include "qfs/rouge.h"
#include "qfs/textnorm.h"

namespace qfs {

enum class QueryMode { original, evidence };

const char* to_string(QueryMode mode);
QueryMode parse_query_mode(std::string_view text);

inline constexpr std::string_view kTokenizerTag = "ws-edgepunct-lower-v1";

struct PipelineConfig {
  std::optional<std::string> stopword_path;
  bool stemming = false;
  std::size_t evidence_cap = 6;
  std::map<std::string, std::size_t> budgets = {{"bart", 1024}, {"led", 1024}, {"pegasus", 1024}, {"roberta", 514}};
  std::optional<std::string> embed_file;
  std::size_t embed_dim = 64;
  std::uint64_t embed_seed = 7;
  std::size_t extractive_k = 2;
  std::vector<RougeVariant> rouge_variants = {kAllRougeVariants.begin(), kAllRougeVariants.end()};
  bool rouge_stemming = false;
  bool rouge_remove_stopwords = false;
  QueryMode query_mode = QueryMode::evidence;
  std::optional<std::string> evidence_queries;  // pipeline: precomputed queries instead of document-only
};

// Plain-text "key = value" lines; '#' and ';' start comments. Unknown or
// repeated keys, non-positive integers and malformed values throw
// usage_error naming the line. Keys mirror PipelineConfig fields, budgets as
// "budget.<model>". Relative paths resolve against `base_dir` when given.
PipelineConfig parse_config(std::string_view text, const std::string& origin = "<config>",
                            const std::string& base_dir = "");
PipelineConfig load_config(const std::string& path);

// Resolved runtime objects for one config.
struct PipelineContext {
  PipelineConfig config;
  NormalizerConfig norm;
  RougeOptions rouge;
  EmbeddingProvider provider;
};

PipelineContext make_context(const PipelineConfig& config);

// Canonical text of every setting that affects outputs, and its FNV-1a-64
// hex digest. `summarizer` names the extrinsic summarizer ("" when unused).
std::string config_canonical(const PipelineContext& ctx, std::string_view summarizer);
std::string config_digest(const PipelineContext& ctx, std::string_view summarizer);

}  // namespace qfs
