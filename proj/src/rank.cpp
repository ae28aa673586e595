#include "qfs/rank.h"

#include <algorithm>
#include <unordered_set>

#include "json.hpp"
#include "qfs/error.h"

namespace qfs {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

}  // namespace

std::vector<RankedSentence> RankedDocument::budget_view(std::size_t budget) const {
  std::vector<RankedSentence> view;
  std::size_t used = 0;
  for (const RankedSentence& e : entries) {
    if (used + e.token_count > budget) break;
    used += e.token_count;
    view.push_back(e);
  }
  return view;
}

RankedDocument rank_sentences(std::string_view document, const TextVector& query_vector,
                              const EmbeddingProvider& provider, const NormalizerConfig& norm) {
  RankedDocument ranked;
  for (Sentence& s : split_sentences(document)) {
    RankedSentence entry;
    entry.orig_index = s.index;
    entry.token_count = s.tokens.size();
    if (query_vector.token_count > 0) {
      std::vector<std::string> words;
      for (const Token& t : s.tokens) {
        if (norm.stopwords && norm.stopwords->contains(t.norm)) continue;
        words.push_back(norm.stemming ? light_stem(t.norm) : t.norm);
      }
      entry.similarity = cosine_similarity(query_vector, embed_text(provider, words));
    }
    entry.text = std::move(s.text);
    ranked.entries.push_back(std::move(entry));
  }
  std::stable_sort(ranked.entries.begin(), ranked.entries.end(),
                   [](const RankedSentence& a, const RankedSentence& b) { return a.similarity > b.similarity; });
  return ranked;
}

RankedDocument rank_sentences(std::string_view document, const EvidenceQuery& query,
                              const EmbeddingProvider& provider, const NormalizerConfig& norm) {
  RankedDocument ranked = rank_sentences(document, embed_text(provider, query.keywords), provider, norm);
  ranked.sample_id = query.sample_id;
  ranked.query = query.keywords;
  return ranked;
}

std::string build_model_input(const RankedDocument& ranked, const EvidenceQuery& query, std::size_t budget,
                              bool query_prefix) {
  std::string out;
  if (query_prefix) {
    const std::string keywords = query.text();
    if (!keywords.empty()) {
      out += keywords;
      out += ' ';
    }
    out += kQuerySeparator;
    out += ' ';
  }
  const std::size_t body_start = out.size();
  std::size_t used = 0;
  for (const RankedSentence& e : ranked.entries) {
    if (used + e.token_count > budget) {
      if (used == 0 && budget > 0) {
        // Nothing emitted yet: keep the top sentence up to its budget-th token.
        const std::vector<Token> tokens = tokenize(e.text);
        out += e.text.substr(0, tokens[budget - 1].end);
      }
      break;
    }
    if (out.size() > body_start) out += ' ';
    out += e.text;
    used += e.token_count;
  }
  return out;
}

std::string extractive_summary(const RankedDocument& ranked, std::size_t k) {
  std::vector<const RankedSentence*> picked;
  for (std::size_t i = 0; i < ranked.entries.size() && i < k; ++i) picked.push_back(&ranked.entries[i]);
  std::sort(picked.begin(), picked.end(),
            [](const RankedSentence* a, const RankedSentence* b) { return a->orig_index < b->orig_index; });
  std::string out;
  for (const RankedSentence* e : picked) {
    if (!out.empty()) out += ' ';
    out += e->text;
  }
  return out;
}

std::string serialize_ranked(const RankedDocument& ranked, const std::string* model_input) {
  ordered_json obj;
  obj["sample_id"] = ranked.sample_id;
  obj["query"] = ranked.query;
  ordered_json entries = ordered_json::array();
  for (const RankedSentence& e : ranked.entries) {
    ordered_json item;
    item["text"] = e.text;
    item["orig_index"] = e.orig_index;
    item["sim"] = e.similarity;
    entries.push_back(std::move(item));
  }
  obj["ranked_sentences"] = std::move(entries);
  if (model_input != nullptr) obj["model_input"] = *model_input;
  return obj.dump(-1, ' ', false, ordered_json::error_handler_t::replace) + "\n";
}

std::vector<RankedDocument> parse_ranked(std::string_view jsonl, const std::string& origin) {
  std::vector<RankedDocument> docs;
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
    try {
      const json obj = json::parse(line);
      RankedDocument doc;
      doc.sample_id = obj.at("sample_id").get<std::string>();
      doc.query = obj.at("query").get<std::vector<std::string>>();
      for (const json& item : obj.at("ranked_sentences")) {
        RankedSentence e;
        e.text = item.at("text").get<std::string>();
        e.orig_index = item.at("orig_index").get<std::size_t>();
        e.similarity = item.at("sim").get<double>();
        e.token_count = tokenize(e.text).size();
        doc.entries.push_back(std::move(e));
      }
      if (!seen.insert(doc.sample_id).second) throw data_error("duplicate sample_id '" + doc.sample_id + "'");
      docs.push_back(std::move(doc));
    } catch (const json::exception& e) {
      throw data_error(at + "bad ranked record: " + e.what());
    } catch (const Error& e) {
      throw data_error(at + e.what());
    }
  }
  return docs;
}

}  // namespace qfs
