#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qfs {

enum class CorpusKind { pair, triad, clustered };

const char* to_string(CorpusKind kind);
// Accepts "pair", "triad", "clustered"; throws usage_error otherwise.
CorpusKind parse_corpus_kind(std::string_view text);

struct CorpusSample {
  std::string sample_id;
  std::optional<std::string> cluster_id;
  std::string document;
  std::optional<std::string> summary;
  std::optional<std::string> original_query;

  bool operator==(const CorpusSample&) const = default;
};

struct Corpus {
  std::string name;
  CorpusKind kind = CorpusKind::pair;
  std::vector<CorpusSample> samples;

  bool operator==(const Corpus&) const = default;
};

// Reads JSON Lines, one sample object per line:
//   {"sample_id": str, "cluster_id": str?, "document": str,
//    "summary": str?, "original_query": str?}
// Blank lines are skipped. Any malformed line, unknown key, duplicate
// sample_id or field missing for `kind` throws data_error naming the line;
// an unreadable file throws io_error naming the path. The corpus name is the
// file stem.
Corpus load_corpus(const std::string& path, CorpusKind kind);

// Same parser over in-memory text; `origin` is used in error messages.
Corpus parse_corpus(std::string_view jsonl, CorpusKind kind, const std::string& origin = "<memory>");

// Throws data_error when a sample violates the invariants of `kind`.
void validate_sample(const CorpusSample& sample, CorpusKind kind);

// One line per sample, keys in schema order, absent optionals omitted.
std::string serialize_corpus(const Corpus& corpus);
void write_corpus(const Corpus& corpus, const std::string& path);

// Shared file helpers.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace qfs
