#include "qfs/config.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <set>

#include "qfs/corpus.h"
#include "qfs/error.h"
#include "qfs/hash.h"

namespace qfs {

namespace {

std::string_view trim(std::string_view s) {
  const std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(std::string_view value, const std::string& at, bool positive) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw usage_error(at + "expected an integer, got '" + std::string(value) + "'");
  }
  if (positive && out == 0) throw usage_error(at + "value must be positive");
  return out;
}

bool parse_bool(std::string_view value, const std::string& at) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw usage_error(at + "expected true or false, got '" + std::string(value) + "'");
}

std::string resolve(std::string_view value, const std::string& base_dir) {
  std::filesystem::path p{std::string(value)};
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  return p.string();
}

}  // namespace

const char* to_string(QueryMode mode) { return mode == QueryMode::original ? "original" : "evidence"; }

QueryMode parse_query_mode(std::string_view text) {
  if (text == "original") return QueryMode::original;
  if (text == "evidence") return QueryMode::evidence;
  throw usage_error("unknown query mode '" + std::string(text) + "' (expected original or evidence)");
}

PipelineConfig parse_config(std::string_view text, const std::string& origin, const std::string& base_dir) {
  PipelineConfig cfg;
  std::set<std::string> seen;
  bool budgets_reset = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const std::size_t c = line.find_first_of("#;"); c != std::string_view::npos) line = line.substr(0, c);
    line = trim(line);
    if (line.empty()) continue;

    const std::string at = origin + ":" + std::to_string(line_no) + ": ";
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw usage_error(at + "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw usage_error(at + "empty key");
    if (!seen.insert(key).second) throw usage_error(at + "duplicate key '" + key + "'");

    if (key == "stopword_path") {
      cfg.stopword_path = resolve(value, base_dir);
    } else if (key == "stemming") {
      cfg.stemming = parse_bool(value, at);
    } else if (key == "evidence_cap") {
      cfg.evidence_cap = parse_uint(value, at, true);
    } else if (key.rfind("budget.", 0) == 0) {
      const std::string model = key.substr(7);
      if (model.empty()) throw usage_error(at + "budget key needs a model name");
      if (!budgets_reset) {
        cfg.budgets.clear();
        budgets_reset = true;
      }
      cfg.budgets[model] = parse_uint(value, at, true);
    } else if (key == "embed_file") {
      cfg.embed_file = resolve(value, base_dir);
    } else if (key == "embed_dim") {
      cfg.embed_dim = parse_uint(value, at, true);
    } else if (key == "embed_seed") {
      cfg.embed_seed = parse_uint(value, at, false);
    } else if (key == "extractive_k") {
      cfg.extractive_k = parse_uint(value, at, true);
    } else if (key == "rouge_variants") {
      cfg.rouge_variants.clear();
      std::size_t p = 0;
      while (p <= value.size()) {
        std::size_t comma = value.find(',', p);
        if (comma == std::string_view::npos) comma = value.size();
        const std::string_view item = trim(value.substr(p, comma - p));
        if (!item.empty()) {
          RougeVariant v;
          try {
            v = parse_rouge_variant(item);
          } catch (const Error& e) {
            throw usage_error(at + e.what());
          }
          if (std::find(cfg.rouge_variants.begin(), cfg.rouge_variants.end(), v) == cfg.rouge_variants.end()) {
            cfg.rouge_variants.push_back(v);
          }
        }
        p = comma + 1;
      }
      if (cfg.rouge_variants.empty()) throw usage_error(at + "rouge_variants is empty");
    } else if (key == "rouge_stemming") {
      cfg.rouge_stemming = parse_bool(value, at);
    } else if (key == "rouge_remove_stopwords") {
      cfg.rouge_remove_stopwords = parse_bool(value, at);
    } else if (key == "query_mode") {
      try {
        cfg.query_mode = parse_query_mode(value);
      } catch (const Error& e) {
        throw usage_error(at + e.what());
      }
    } else if (key == "evidence_queries") {
      cfg.evidence_queries = resolve(value, base_dir);
    } else {
      throw usage_error(at + "unknown key '" + key + "'");
    }
  }
  return cfg;
}

PipelineConfig load_config(const std::string& path) {
  const std::string text = read_text_file(path);
  return parse_config(text, path, std::filesystem::path(path).parent_path().string());
}

PipelineContext make_context(const PipelineConfig& config) {
  EmbeddingProvider provider = config.embed_file
                                   ? EmbeddingProvider::from_file(*config.embed_file)
                                   : EmbeddingProvider::hash_fallback(config.embed_dim, config.embed_seed);
  PipelineContext ctx{config, {}, {}, std::move(provider)};
  ctx.norm.stopwords = config.stopword_path ? StopwordList::from_file(*config.stopword_path) : StopwordList::bundled();
  ctx.norm.stemming = config.stemming;
  ctx.rouge.stemming = config.rouge_stemming;
  ctx.rouge.remove_stopwords = config.rouge_remove_stopwords;
  ctx.rouge.stopwords = ctx.norm.stopwords;
  return ctx;
}

std::string config_canonical(const PipelineContext& ctx, std::string_view summarizer) {
  const PipelineConfig& c = ctx.config;
  std::string out;
  const auto line = [&](std::string_view key, const std::string& value) {
    out.append(key);
    out += '=';
    out += value;
    out += '\n';
  };
  line("tokenizer", std::string(kTokenizerTag));
  line("stopwords", ctx.norm.stopwords->fingerprint());
  line("stemming", c.stemming ? "true" : "false");
  line("evidence_cap", std::to_string(c.evidence_cap));
  for (const auto& [model, budget] : c.budgets) line("budget." + model, std::to_string(budget));
  line("embed", ctx.provider.descriptor());
  line("extractive_k", std::to_string(c.extractive_k));
  std::string variants;
  for (RougeVariant v : c.rouge_variants) {
    if (!variants.empty()) variants += ',';
    variants += to_string(v);
  }
  line("rouge_variants", variants);
  line("rouge_stemming", c.rouge_stemming ? "true" : "false");
  line("rouge_remove_stopwords", c.rouge_remove_stopwords ? "true" : "false");
  line("summarizer", std::string(summarizer));
  return out;
}

std::string config_digest(const PipelineContext& ctx, std::string_view summarizer) {
  return to_hex(fnv1a64(config_canonical(ctx, summarizer)));
}

}  // namespace qfs
