#include "qfs/evidence.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "json.hpp"
#include "qfs/error.h"
#include "qfs/kernels.h"

namespace qfs {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string dump_line(const ordered_json& obj) {
  return obj.dump(-1, ' ', false, ordered_json::error_handler_t::replace) + "\n";
}

}  // namespace

const char* to_string(QuerySource source) {
  switch (source) {
    case QuerySource::pair_oracle:
      return "pair_oracle";
    case QuerySource::document_only:
      return "document_only";
    case QuerySource::bridge_generated:
      return "bridge_generated";
    case QuerySource::original:
      return "original";
  }
  return "pair_oracle";
}

QuerySource parse_query_source(std::string_view text) {
  if (text == "pair_oracle") return QuerySource::pair_oracle;
  if (text == "document_only") return QuerySource::document_only;
  if (text == "bridge_generated") return QuerySource::bridge_generated;
  if (text == "original") return QuerySource::original;
  throw data_error("unknown query source '" + std::string(text) + "'");
}

std::string EvidenceQuery::text() const {
  std::string out;
  for (const std::string& k : keywords) {
    if (!out.empty()) out += ' ';
    out += k;
  }
  return out;
}

EvidenceQuery extract_evidence(std::string_view document, std::string_view summary, std::size_t cap,
                               const NormalizerConfig& norm) {
  EvidenceQuery query;
  query.source = QuerySource::pair_oracle;
  const std::vector<std::string> summary_norms = content_norms(summary, norm);
  const std::unordered_set<std::string> in_summary(summary_norms.begin(), summary_norms.end());
  std::unordered_set<std::string> taken;
  for (std::string& w : content_norms(document, norm)) {
    if (query.keywords.size() >= cap) break;
    if (in_summary.count(w) == 0 || taken.count(w) != 0) continue;
    taken.insert(w);
    query.keywords.push_back(std::move(w));
  }
  return query;
}

void DfTable::add_document(const std::vector<std::string>& content_norms) {
  ++documents_;
  std::unordered_set<std::string> distinct(content_norms.begin(), content_norms.end());
  for (const std::string& w : distinct) ++df_[w];
}

std::size_t DfTable::df(const std::string& norm) const {
  const auto it = df_.find(norm);
  return it == df_.end() ? 0 : it->second;
}

double DfTable::idf(const std::string& norm) const {
  return std::log((static_cast<double>(documents_) + 1.0) / (static_cast<double>(df(norm)) + 1.0)) + 1.0;
}

DfTable DfTable::build(const Corpus& corpus, const NormalizerConfig& norm) {
  DfTable table;
  for (const CorpusSample& s : corpus.samples) table.add_document(content_norms(s.document, norm));
  return table;
}

EvidenceQuery generate_query_document_only(std::string_view document, std::size_t cap, const DfTable& df,
                                           const NormalizerConfig& norm) {
  struct Candidate {
    std::string word;
    std::size_t first = 0;
    std::size_t tf = 0;
    double score = 0.0;
  };
  std::vector<Candidate> candidates;
  std::unordered_map<std::string, std::size_t> slot;
  const std::vector<std::string> words = content_norms(document, norm);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto [it, inserted] = slot.emplace(words[i], candidates.size());
    if (inserted) candidates.push_back({words[i], i, 0, 0.0});
    ++candidates[it->second].tf;
  }
  for (Candidate& c : candidates) c.score = static_cast<double>(c.tf) * df.idf(c.word);

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.first != b.first) return a.first < b.first;
    return a.word < b.word;
  });
  if (candidates.size() > cap) candidates.resize(cap);
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.first < b.first; });

  EvidenceQuery query;
  query.source = QuerySource::document_only;
  for (Candidate& c : candidates) query.keywords.push_back(std::move(c.word));
  return query;
}

TrainingExport export_training_pairs(const Corpus& corpus, std::size_t cap, const NormalizerConfig& norm,
                                     int jobs) {
  if (corpus.kind != CorpusKind::pair) throw data_error("training-pair export needs a pair corpus");
  const std::vector<EvidenceQuery> queries = parallel::extract_evidence_batch(corpus, cap, norm, jobs);
  TrainingExport out;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    if (queries[i].keywords.empty()) {
      ++out.skipped;
      continue;
    }
    out.records.push_back({corpus.samples[i].sample_id, corpus.samples[i].document, queries[i].text()});
  }
  return out;
}

std::string serialize_training_pairs(const std::vector<TrainingPair>& records) {
  std::string out;
  for (const TrainingPair& r : records) {
    ordered_json obj;
    obj["sample_id"] = r.sample_id;
    obj["document"] = r.document;
    obj["evidence"] = r.evidence;
    out += dump_line(obj);
  }
  return out;
}

std::string serialize_queries(const std::vector<EvidenceQuery>& queries) {
  std::string out;
  for (const EvidenceQuery& q : queries) {
    ordered_json obj;
    obj["sample_id"] = q.sample_id;
    obj["query"] = q.keywords;
    obj["source"] = to_string(q.source);
    out += dump_line(obj);
  }
  return out;
}

std::vector<EvidenceQuery> parse_queries(std::string_view jsonl, QuerySource fallback_source,
                                         const std::string& origin) {
  std::vector<EvidenceQuery> queries;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < jsonl.size()) {
    std::size_t nl = jsonl.find('\n', pos);
    if (nl == std::string_view::npos) nl = jsonl.size();
    const std::string_view line = jsonl.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string at = origin + ":" + std::to_string(line_no) + ": ";
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw data_error(at + "malformed JSON: " + e.what());
    }
    if (!obj.is_object() || !obj.contains("sample_id") || !obj["sample_id"].is_string()) {
      throw data_error(at + "expected an object with a string sample_id");
    }
    EvidenceQuery q;
    q.sample_id = obj["sample_id"].get<std::string>();
    q.source = fallback_source;
    if (obj.contains("query")) {
      if (!obj["query"].is_array()) throw data_error(at + "'query' must be an array of strings");
      for (const json& k : obj["query"]) {
        if (!k.is_string()) throw data_error(at + "'query' must be an array of strings");
        q.keywords.push_back(k.get<std::string>());
      }
    } else if (obj.contains("evidence")) {
      if (!obj["evidence"].is_string()) throw data_error(at + "'evidence' must be a string");
      for (const Token& t : tokenize(obj["evidence"].get<std::string>())) q.keywords.push_back(t.norm);
    } else {
      throw data_error(at + "line has neither 'query' nor 'evidence'");
    }
    if (obj.contains("source")) {
      if (!obj["source"].is_string()) throw data_error(at + "'source' must be a string");
      try {
        q.source = parse_query_source(obj["source"].get<std::string>());
      } catch (const Error& e) {
        throw data_error(at + e.what());
      }
    }
    if (!seen.insert(q.sample_id).second) throw data_error(at + "duplicate sample_id '" + q.sample_id + "'");
    queries.push_back(std::move(q));
  }
  return queries;
}

std::vector<EvidenceQuery> load_queries(const std::string& path, QuerySource fallback_source) {
  return parse_queries(read_text_file(path), fallback_source, path);
}

}  // namespace qfs
