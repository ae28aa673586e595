#include "qfs/evalsuite.h"

#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "qfs/error.h"
#include "qfs/kernels.h"

namespace qfs {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& obj) { return obj.dump(2, ' ', false, ordered_json::error_handler_t::replace) + "\n"; }

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

IntrinsicReport intrinsic_similarity(const Corpus& corpus, const std::vector<EvidenceQuery>& queries,
                                     const PipelineContext& ctx, int jobs) {
  std::unordered_map<std::string, const EvidenceQuery*> by_id;
  for (const EvidenceQuery& q : queries) by_id.emplace(q.sample_id, &q);

  IntrinsicReport report;
  report.corpus_name = corpus.name;
  report.provider_descriptor = ctx.provider.descriptor();
  report.config_digest = config_digest(ctx, "");

  std::vector<QueryPair> pairs;
  for (const CorpusSample& s : corpus.samples) {
    if (!s.original_query) continue;
    const auto it = by_id.find(s.sample_id);
    if (it == by_id.end()) {
      ++report.excluded;
      continue;
    }
    pairs.push_back({content_norms(*s.original_query, ctx.norm), content_norms(join(it->second->keywords), ctx.norm)});
    report.per_sample.emplace_back(s.sample_id, 0.0);
  }
  const std::vector<double> sims = parallel::query_similarity_batch(pairs, ctx.provider, jobs);
  double total = 0.0;
  for (std::size_t i = 0; i < sims.size(); ++i) {
    report.per_sample[i].second = sims[i];
    total += sims[i];
  }
  if (!sims.empty()) report.mean_similarity = total / static_cast<double>(sims.size());
  return report;
}

std::string serialize_intrinsic(const IntrinsicReport& report) {
  ordered_json obj;
  obj["corpus_name"] = report.corpus_name;
  obj["provider"] = report.provider_descriptor;
  obj["config_digest"] = report.config_digest;
  obj["aggregation"] = "arithmetic_mean";
  obj["samples"] = report.per_sample.size();
  obj["excluded"] = report.excluded;
  obj["mean_similarity"] = report.mean_similarity;
  ordered_json per = ordered_json::array();
  for (const auto& [id, sim] : report.per_sample) {
    ordered_json item;
    item["sample_id"] = id;
    item["similarity"] = sim;
    per.push_back(std::move(item));
  }
  obj["per_sample"] = std::move(per);
  return dump(obj);
}

std::string SummarizerSpec::descriptor() const {
  if (kind == SummarizerKind::bridge_file) return "bridge_file";
  return "extractive(k=" + std::to_string(k) + ")";
}

std::map<std::string, std::string> load_bridge_summaries(const std::string& path) {
  const std::string text = read_text_file(path);
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    const std::string_view line(text.data() + pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string at = path + ":" + std::to_string(line_no) + ": ";
    try {
      const json obj = json::parse(line);
      std::string id = obj.at("sample_id").get<std::string>();
      std::string summary = obj.at("summary").get<std::string>();
      if (!out.emplace(id, std::move(summary)).second) throw data_error(at + "duplicate sample_id '" + id + "'");
    } catch (const json::exception& e) {
      throw data_error(at + "bad summary record: " + e.what());
    }
  }
  return out;
}

std::vector<EvidenceQuery> resolve_queries(const Corpus& corpus, const ExtrinsicRequest& request,
                                           const PipelineContext& ctx, int jobs) {
  std::vector<EvidenceQuery> queries;
  if (request.mode == QueryMode::original) {
    queries.reserve(corpus.samples.size());
    for (const CorpusSample& s : corpus.samples) {
      if (!s.original_query) throw data_error("sample '" + s.sample_id + "' has no original_query");
      if (request.hooks.on_original_query_read) request.hooks.on_original_query_read(s.sample_id);
      queries.push_back({s.sample_id, content_norms(*s.original_query, ctx.norm), QuerySource::original});
    }
    return queries;
  }
  if (request.evidence_queries == nullptr) {
    const DfTable df = DfTable::build(corpus, ctx.norm);
    queries = parallel::generate_queries_batch(corpus, ctx.config.evidence_cap, df, ctx.norm, jobs);
    if (request.hooks.on_evidence_query_read) {
      for (const EvidenceQuery& q : queries) request.hooks.on_evidence_query_read(q.sample_id);
    }
    return queries;
  }
  const auto aligned = align_by_id(corpus, *request.evidence_queries,
                                   [](const EvidenceQuery& q) { return q.sample_id; }, "evidence queries");
  for (const EvidenceQuery* q : aligned) {
    if (request.hooks.on_evidence_query_read) request.hooks.on_evidence_query_read(q->sample_id);
    queries.push_back(*q);
  }
  return queries;
}

ExtrinsicReport run_extrinsic(const Corpus& corpus, const ExtrinsicRequest& request, const PipelineContext& ctx,
                              int jobs) {
  if (corpus.samples.empty()) throw data_error("extrinsic evaluation needs a non-empty corpus");
  for (const CorpusSample& s : corpus.samples) {
    if (!s.summary) throw data_error("sample '" + s.sample_id + "' has no gold summary");
  }

  std::vector<SummaryPair> pairs;
  pairs.reserve(corpus.samples.size());
  if (request.summarizer.kind == SummarizerKind::bridge_file) {
    std::vector<std::pair<std::string, std::string>> items(request.summarizer.bridge_summaries.begin(),
                                                          request.summarizer.bridge_summaries.end());
    const auto aligned = align_by_id(corpus, items, [](const auto& kv) { return kv.first; }, "bridge summaries");
    for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
      pairs.push_back({corpus.samples[i].sample_id, aligned[i]->second, *corpus.samples[i].summary});
    }
  } else {
    std::vector<RankedDocument> owned;
    std::vector<const RankedDocument*> ranked;
    if (request.ranked != nullptr) {
      ranked = align_by_id(corpus, *request.ranked, [](const RankedDocument& r) { return r.sample_id; },
                           "ranked documents");
    } else {
      const std::vector<EvidenceQuery> queries = resolve_queries(corpus, request, ctx, jobs);
      owned = parallel::rank_batch(corpus, queries, ctx.provider, ctx.norm, jobs);
      for (const RankedDocument& r : owned) ranked.push_back(&r);
    }
    for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
      pairs.push_back({corpus.samples[i].sample_id, extractive_summary(*ranked[i], request.summarizer.k),
                       *corpus.samples[i].summary});
    }
  }

  ExtrinsicReport report;
  report.corpus_name = corpus.name;
  report.query_mode = request.mode;
  report.summarizer = request.summarizer.descriptor();
  report.config_digest = config_digest(ctx, report.summarizer);
  report.rouge = corpus_rouge(pairs, ctx.config.rouge_variants, ctx.rouge, jobs);
  return report;
}

std::string serialize_extrinsic(const ExtrinsicReport& report) {
  ordered_json obj;
  obj["corpus_name"] = report.corpus_name;
  obj["query_mode"] = to_string(report.query_mode);
  obj["summarizer"] = report.summarizer;
  obj["config_digest"] = report.config_digest;
  obj["aggregation"] = "macro_mean";
  obj["samples"] = report.rouge.per_sample.size();
  ordered_json rouge = ordered_json::object();
  for (const RougeScore& m : report.rouge.mean) {
    ordered_json s;
    s["precision"] = m.precision;
    s["recall"] = m.recall;
    s["f1"] = m.f1;
    rouge[to_string(m.variant)] = std::move(s);
  }
  obj["rouge"] = std::move(rouge);
  return dump(obj);
}

}  // namespace qfs
