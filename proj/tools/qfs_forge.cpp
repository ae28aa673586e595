// qfs-forge: evidence queries, query-focused ranking and ROUGE evaluation
// over JSONL summarization corpora.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfs/config.h"
#include "qfs/corpus.h"
#include "qfs/error.h"
#include "qfs/evalsuite.h"
#include "qfs/evidence.h"
#include "qfs/kernels.h"
#include "qfs/rank.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitIo = 4;

// Flags shared by every subcommand.
struct CommonOptions {
  std::string config_path;
  std::string stopwords;
  bool stem = false;
  std::string embed_file;
  std::optional<std::size_t> embed_dim;
  std::optional<std::uint64_t> embed_seed;
  int jobs = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "Pipeline config file (key = value)");
  cmd->add_option("--stopwords", opts.stopwords,
                  "Stopword list, one token per line (overrides QFS_FORGE_STOPWORDS and the config)");
  cmd->add_flag("--stem", opts.stem, "Enable the light suffix stemmer");
  cmd->add_option("--embed-file", opts.embed_file, "GloVe-style text vector file");
  cmd->add_option("--embed-dim", opts.embed_dim, "Hash-fallback embedding dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--embed-seed", opts.embed_seed, "Hash-fallback embedding seed");
  cmd->add_option("--jobs", opts.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
}

qfs::PipelineConfig resolve_config(const CommonOptions& opts) {
  qfs::PipelineConfig cfg = opts.config_path.empty() ? qfs::PipelineConfig{} : qfs::load_config(opts.config_path);
  if (const char* env = std::getenv("QFS_FORGE_STOPWORDS"); env != nullptr && *env != '\0') cfg.stopword_path = env;
  if (!opts.stopwords.empty()) cfg.stopword_path = opts.stopwords;
  if (opts.stem) cfg.stemming = true;
  if (!opts.embed_file.empty()) cfg.embed_file = opts.embed_file;
  if (opts.embed_dim) {
    cfg.embed_dim = *opts.embed_dim;
    if (opts.embed_file.empty()) cfg.embed_file.reset();
  }
  if (opts.embed_seed) {
    cfg.embed_seed = *opts.embed_seed;
    if (opts.embed_file.empty()) cfg.embed_file.reset();
  }
  return cfg;
}

std::vector<qfs::EvidenceQuery> aligned_queries(const qfs::Corpus& corpus, const std::string& path) {
  const std::vector<qfs::EvidenceQuery> loaded = qfs::load_queries(path);
  const auto aligned =
      qfs::align_by_id(corpus, loaded, [](const qfs::EvidenceQuery& q) { return q.sample_id; }, "queries file");
  std::vector<qfs::EvidenceQuery> out;
  out.reserve(aligned.size());
  for (const qfs::EvidenceQuery* q : aligned) out.push_back(*q);
  return out;
}

int fail(const qfs::Error& e) {
  nlohmann::ordered_json line;
  line["error"] = qfs::to_string(e.kind());
  line["message"] = e.what();
  std::cerr << line.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace) << "\n";
  switch (e.kind()) {
    case qfs::ErrorKind::usage:
      return kExitUsage;
    case qfs::ErrorKind::data:
      return kExitData;
    case qfs::ErrorKind::io:
      return kExitIo;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qfs-forge: evidence-based query generation and query-focused summarization evaluation"};
  app.require_subcommand(1);

  // extract-evidence
  CommonOptions ev_opts;
  std::string ev_corpus;
  std::string ev_kind = "pair";
  std::string ev_out;
  std::optional<std::size_t> ev_cap;
  auto* ev = app.add_subcommand("extract-evidence", "Write (document, evidence) training pairs from a pair corpus");
  ev->add_option("--corpus", ev_corpus, "Pair corpus JSONL")->required();
  ev->add_option("--kind", ev_kind, "Corpus kind (must be pair)");
  ev->add_option("--out", ev_out, "Output JSONL {sample_id, document, evidence}")->required();
  ev->add_option("--cap", ev_cap, "Maximum evidence keywords")->check(CLI::PositiveNumber);
  add_common(ev, ev_opts);

  // gen-query
  CommonOptions gq_opts;
  std::string gq_corpus;
  std::string gq_kind = "triad";
  std::string gq_mode = "document-only";
  std::string gq_out;
  std::optional<std::size_t> gq_cap;
  auto* gq = app.add_subcommand("gen-query", "Generate queries from documents alone");
  gq->add_option("--corpus", gq_corpus, "Corpus JSONL")->required();
  gq->add_option("--kind", gq_kind, "Corpus kind: pair, triad or clustered");
  gq->add_option("--mode", gq_mode, "Generator")->check(CLI::IsMember({"document-only"}));
  gq->add_option("--out", gq_out, "Output queries JSONL")->required();
  gq->add_option("--cap", gq_cap, "Maximum keywords per query")->check(CLI::PositiveNumber);
  add_common(gq, gq_opts);

  // rank
  CommonOptions rk_opts;
  std::string rk_corpus;
  std::string rk_kind = "triad";
  std::string rk_queries;
  std::string rk_out;
  std::optional<std::size_t> rk_budget;
  std::string rk_model;
  bool rk_prefix = false;
  auto* rk = app.add_subcommand("rank", "Rank document sentences by similarity to each query");
  rk->add_option("--corpus", rk_corpus, "Corpus JSONL")->required();
  rk->add_option("--kind", rk_kind, "Corpus kind: pair, triad or clustered");
  rk->add_option("--queries", rk_queries, "Queries JSONL (query arrays or evidence strings)")->required();
  rk->add_option("--out", rk_out, "Ranked output JSONL")->required();
  auto* budget_opt =
      rk->add_option("--budget", rk_budget, "Word-token budget; adds model_input to each line")->check(CLI::PositiveNumber);
  rk->add_option("--model", rk_model, "Take the budget from the config entry budget.<model>")->excludes(budget_opt);
  rk->add_flag("--query-prefix", rk_prefix, "Prefix model_input with '<keywords> </q> '");
  add_common(rk, rk_opts);

  // evaluate
  CommonOptions ea_opts;
  std::string ea_mode;
  std::string ea_corpus;
  std::string ea_kind;
  std::string ea_queries;
  std::string ea_ranked;
  std::string ea_query_mode;
  std::string ea_summarizer = "extractive";
  std::string ea_summaries;
  std::optional<std::size_t> ea_k;
  std::string ea_report;
  std::string ea_audit;
  auto* ea = app.add_subcommand("evaluate", "Intrinsic query similarity or extrinsic ROUGE evaluation");
  ea->add_option("--mode", ea_mode, "intrinsic or extrinsic")->required()->check(CLI::IsMember({"intrinsic", "extrinsic"}));
  ea->add_option("--corpus", ea_corpus, "Corpus JSONL")->required();
  ea->add_option("--kind", ea_kind, "Corpus kind (default: clustered for intrinsic, triad for extrinsic)");
  ea->add_option("--queries", ea_queries, "Evidence queries JSONL");
  ea->add_option("--ranked", ea_ranked, "Precomputed rank output (extrinsic, extractive summarizer)");
  ea->add_option("--query-mode", ea_query_mode, "original or evidence (extrinsic; default from config)")
      ->check(CLI::IsMember({"original", "evidence"}));
  ea->add_option("--summarizer", ea_summarizer, "extractive or bridge_file")
      ->check(CLI::IsMember({"extractive", "bridge_file"}));
  ea->add_option("--summaries", ea_summaries, "Generated summaries JSONL {sample_id, summary} for bridge_file");
  ea->add_option("--k", ea_k, "Sentences in the extractive summary")->check(CLI::PositiveNumber);
  ea->add_option("--report", ea_report, "Report JSON path")->required();
  ea->add_option("--audit", ea_audit, "Per-sample audit JSONL (extrinsic; default <report>.samples.jsonl)");
  add_common(ea, ea_opts);

  // pipeline
  CommonOptions pl_opts;
  std::string pl_corpus;
  std::string pl_kind = "triad";
  std::string pl_report;
  std::string pl_audit;
  auto* pl = app.add_subcommand("pipeline", "queries -> rank -> extractive summary -> ROUGE in one run");
  pl->add_option("--corpus", pl_corpus, "Triad corpus JSONL")->required();
  pl->add_option("--kind", pl_kind, "Corpus kind (default triad)");
  pl->add_option("--report", pl_report, "Report JSON path")->required();
  pl->add_option("--audit", pl_audit, "Per-sample audit JSONL (default <report>.samples.jsonl)");
  add_common(pl, pl_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (ev->parsed()) {
      qfs::PipelineConfig cfg = resolve_config(ev_opts);
      if (ev_cap) cfg.evidence_cap = *ev_cap;
      if (qfs::parse_corpus_kind(ev_kind) != qfs::CorpusKind::pair) {
        throw qfs::usage_error("extract-evidence needs --kind pair");
      }
      const qfs::Corpus corpus = qfs::load_corpus(ev_corpus, qfs::CorpusKind::pair);
      const qfs::PipelineContext ctx = qfs::make_context(cfg);
      const qfs::TrainingExport exported = qfs::export_training_pairs(corpus, cfg.evidence_cap, ctx.norm, ev_opts.jobs);
      qfs::write_text_file(ev_out, qfs::serialize_training_pairs(exported.records));
      std::cout << exported.records.size() << " written, " << exported.skipped << " skipped\n";
      return 0;
    }

    if (gq->parsed()) {
      qfs::PipelineConfig cfg = resolve_config(gq_opts);
      if (gq_cap) cfg.evidence_cap = *gq_cap;
      const qfs::Corpus corpus = qfs::load_corpus(gq_corpus, qfs::parse_corpus_kind(gq_kind));
      const qfs::PipelineContext ctx = qfs::make_context(cfg);
      const qfs::DfTable df = qfs::DfTable::build(corpus, ctx.norm);
      const auto queries = qfs::parallel::generate_queries_batch(corpus, cfg.evidence_cap, df, ctx.norm, gq_opts.jobs);
      qfs::write_text_file(gq_out, qfs::serialize_queries(queries));
      std::cout << queries.size() << " queries written\n";
      return 0;
    }

    if (rk->parsed()) {
      const qfs::PipelineConfig cfg = resolve_config(rk_opts);
      const qfs::Corpus corpus = qfs::load_corpus(rk_corpus, qfs::parse_corpus_kind(rk_kind));
      const qfs::PipelineContext ctx = qfs::make_context(cfg);
      const std::vector<qfs::EvidenceQuery> queries = aligned_queries(corpus, rk_queries);
      const auto ranked = qfs::parallel::rank_batch(corpus, queries, ctx.provider, ctx.norm, rk_opts.jobs);
      std::optional<std::size_t> budget = rk_budget;
      if (!rk_model.empty()) {
        const auto it = cfg.budgets.find(rk_model);
        if (it == cfg.budgets.end()) throw qfs::usage_error("no budget configured for model '" + rk_model + "'");
        budget = it->second;
      }
      std::string out;
      for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (budget) {
          const std::string input = qfs::build_model_input(ranked[i], queries[i], *budget, rk_prefix);
          out += qfs::serialize_ranked(ranked[i], &input);
        } else {
          out += qfs::serialize_ranked(ranked[i]);
        }
      }
      qfs::write_text_file(rk_out, out);
      std::cout << ranked.size() << " documents ranked\n";
      return 0;
    }

    if (ea->parsed()) {
      qfs::PipelineConfig cfg = resolve_config(ea_opts);
      if (ea_k) cfg.extractive_k = *ea_k;
      const bool intrinsic = ea_mode == "intrinsic";
      const std::string kind = ea_kind.empty() ? (intrinsic ? "clustered" : "triad") : ea_kind;
      const qfs::Corpus corpus = qfs::load_corpus(ea_corpus, qfs::parse_corpus_kind(kind));
      const qfs::PipelineContext ctx = qfs::make_context(cfg);

      if (intrinsic) {
        if (ea_queries.empty()) throw qfs::usage_error("intrinsic evaluation needs --queries");
        const auto queries = qfs::load_queries(ea_queries);
        const qfs::IntrinsicReport report = qfs::intrinsic_similarity(corpus, queries, ctx, ea_opts.jobs);
        qfs::write_text_file(ea_report, qfs::serialize_intrinsic(report));
        std::cout << "mean_similarity " << report.mean_similarity << " over " << report.per_sample.size()
                  << " samples (" << report.excluded << " excluded)\n";
        return 0;
      }

      qfs::ExtrinsicRequest request;
      request.mode = ea_query_mode.empty() ? cfg.query_mode : qfs::parse_query_mode(ea_query_mode);
      std::vector<qfs::EvidenceQuery> queries;
      if (!ea_queries.empty()) {
        if (request.mode != qfs::QueryMode::evidence) throw qfs::usage_error("--queries applies to evidence mode only");
        queries = qfs::load_queries(ea_queries);
        request.evidence_queries = &queries;
      }
      std::vector<qfs::RankedDocument> ranked;
      if (!ea_ranked.empty()) {
        ranked = qfs::parse_ranked(qfs::read_text_file(ea_ranked), ea_ranked);
        request.ranked = &ranked;
      }
      request.summarizer.k = cfg.extractive_k;
      if (ea_summarizer == "bridge_file") {
        if (ea_summaries.empty()) throw qfs::usage_error("--summarizer bridge_file needs --summaries");
        request.summarizer.kind = qfs::SummarizerKind::bridge_file;
        request.summarizer.bridge_summaries = qfs::load_bridge_summaries(ea_summaries);
      }
      const qfs::ExtrinsicReport report = qfs::run_extrinsic(corpus, request, ctx, ea_opts.jobs);
      qfs::write_text_file(ea_report, qfs::serialize_extrinsic(report));
      qfs::write_text_file(ea_audit.empty() ? ea_report + ".samples.jsonl" : ea_audit,
                           qfs::serialize_rouge_audit(report.rouge));
      std::cout << "evaluated " << report.rouge.per_sample.size() << " samples\n";
      return 0;
    }

    if (pl->parsed()) {
      const qfs::PipelineConfig cfg = resolve_config(pl_opts);
      const qfs::Corpus corpus = qfs::load_corpus(pl_corpus, qfs::parse_corpus_kind(pl_kind));
      const qfs::PipelineContext ctx = qfs::make_context(cfg);
      qfs::ExtrinsicRequest request;
      request.mode = cfg.query_mode;
      request.summarizer.k = cfg.extractive_k;
      std::vector<qfs::EvidenceQuery> queries;
      if (cfg.evidence_queries && cfg.query_mode == qfs::QueryMode::evidence) {
        queries = qfs::load_queries(*cfg.evidence_queries);
        request.evidence_queries = &queries;
      }
      const qfs::ExtrinsicReport report = qfs::run_extrinsic(corpus, request, ctx, pl_opts.jobs);
      qfs::write_text_file(pl_report, qfs::serialize_extrinsic(report));
      qfs::write_text_file(pl_audit.empty() ? pl_report + ".samples.jsonl" : pl_audit,
                           qfs::serialize_rouge_audit(report.rouge));
      std::cout << "evaluated " << report.rouge.per_sample.size() << " samples\n";
      return 0;
    }
  } catch (const qfs::Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    return fail(qfs::Error(qfs::ErrorKind::data, e.what()));
  }
  return kExitUsage;
}
