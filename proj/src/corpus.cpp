#include "qfs/corpus.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "qfs/error.h"

namespace qfs {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

std::string where(const std::string& origin, std::size_t line) {
  return origin + ":" + std::to_string(line) + ": ";
}

std::optional<std::string> optional_string(const json& obj, const char* key, const std::string& at) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw data_error(at + "field '" + key + "' must be a string");
  return it->get<std::string>();
}

}  // namespace

const char* to_string(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::pair:
      return "pair";
    case CorpusKind::triad:
      return "triad";
    case CorpusKind::clustered:
      return "clustered";
  }
  return "pair";
}

CorpusKind parse_corpus_kind(std::string_view text) {
  if (text == "pair") return CorpusKind::pair;
  if (text == "triad") return CorpusKind::triad;
  if (text == "clustered") return CorpusKind::clustered;
  throw usage_error("unknown corpus kind '" + std::string(text) + "' (expected pair, triad or clustered)");
}

void validate_sample(const CorpusSample& sample, CorpusKind kind) {
  if (sample.sample_id.empty()) throw data_error("empty sample_id");
  if (blank(sample.document)) throw data_error("sample '" + sample.sample_id + "': document is empty");
  const auto require = [&](const std::optional<std::string>& field, const char* name) {
    if (!field) {
      throw data_error("sample '" + sample.sample_id + "': missing " + name + " required for " +
                       to_string(kind) + " corpus");
    }
  };
  switch (kind) {
    case CorpusKind::pair:
      require(sample.summary, "summary");
      break;
    case CorpusKind::triad:
      require(sample.summary, "summary");
      require(sample.original_query, "original_query");
      break;
    case CorpusKind::clustered:
      require(sample.cluster_id, "cluster_id");
      require(sample.original_query, "original_query");
      break;
  }
}

Corpus parse_corpus(std::string_view jsonl, CorpusKind kind, const std::string& origin) {
  Corpus corpus;
  corpus.kind = kind;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < jsonl.size()) {
    std::size_t nl = jsonl.find('\n', pos);
    if (nl == std::string_view::npos) nl = jsonl.size();
    const std::string_view line = jsonl.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (blank(line)) continue;

    const std::string at = where(origin, line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw data_error(at + "malformed JSON: " + e.what());
    }
    if (!obj.is_object()) throw data_error(at + "expected a JSON object");
    for (const auto& item : obj.items()) {
      const std::string& key = item.key();
      if (key != "sample_id" && key != "cluster_id" && key != "document" && key != "summary" &&
          key != "original_query") {
        throw data_error(at + "unknown field '" + key + "'");
      }
    }

    CorpusSample sample;
    auto id = optional_string(obj, "sample_id", at);
    if (!id) throw data_error(at + "missing sample_id");
    sample.sample_id = std::move(*id);
    auto document = optional_string(obj, "document", at);
    if (!document) throw data_error(at + "missing document");
    sample.document = std::move(*document);
    sample.cluster_id = optional_string(obj, "cluster_id", at);
    sample.summary = optional_string(obj, "summary", at);
    sample.original_query = optional_string(obj, "original_query", at);

    try {
      validate_sample(sample, kind);
    } catch (const Error& e) {
      throw data_error(at + e.what());
    }
    const auto [it, inserted] = seen.emplace(sample.sample_id, line_no);
    if (!inserted) {
      throw data_error(at + "duplicate sample_id '" + sample.sample_id + "' (first seen on line " +
                       std::to_string(it->second) + ")");
    }
    corpus.samples.push_back(std::move(sample));
  }
  return corpus;
}

Corpus load_corpus(const std::string& path, CorpusKind kind) {
  Corpus corpus = parse_corpus(read_text_file(path), kind, path);
  corpus.name = std::filesystem::path(path).stem().string();
  return corpus;
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const CorpusSample& s : corpus.samples) {
    ordered_json obj;
    obj["sample_id"] = s.sample_id;
    if (s.cluster_id) obj["cluster_id"] = *s.cluster_id;
    obj["document"] = s.document;
    if (s.summary) obj["summary"] = *s.summary;
    if (s.original_query) obj["original_query"] = *s.original_query;
    out += obj.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

void write_corpus(const Corpus& corpus, const std::string& path) {
  write_text_file(path, serialize_corpus(corpus));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_error("read failed for '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw io_error("write failed for '" + path + "'");
}

}  // namespace qfs
