#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace qfs {

struct Token {
  std::string surface;
  std::string norm;
  std::size_t begin = 0;  // byte offsets into the source text, [begin, end)
  std::size_t end = 0;
};

struct Sentence {
  std::string text;
  std::vector<Token> tokens;
  std::size_t index = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
};

using SentenceList = std::vector<Sentence>;

// Splits on Unicode whitespace, strips leading and trailing punctuation from
// each piece and lowercases ASCII letters. Pieces that are all punctuation
// are dropped. Internal hyphens and apostrophes survive ("lung-cancer").
std::vector<Token> tokenize(std::string_view text);

// Sentence boundary: one of . ? ! (optionally followed by closing quotes or
// brackets), then whitespace, then an ASCII uppercase letter or digit. A
// period after a known abbreviation or a single-letter initial is not a
// boundary. Input without a boundary yields a single sentence; input with no
// non-whitespace content yields none.
SentenceList split_sentences(std::string_view text);

// Light suffix stripper: -ing, -es, then plural -s (not -ss), each only when
// at least four characters of stem remain.
std::string light_stem(std::string_view norm);

class StopwordList {
 public:
  // The bundled English list.
  static std::shared_ptr<const StopwordList> bundled();
  // One lowercase token per line; blank lines and lines starting with '#'
  // are ignored. Throws io_error when the file cannot be read.
  static std::shared_ptr<const StopwordList> from_file(const std::string& path);
  static std::shared_ptr<const StopwordList> from_words(const std::vector<std::string>& words);

  bool contains(std::string_view norm) const;
  std::size_t size() const { return words_.size(); }
  // Stable fingerprint of the sorted word set, used in config digests.
  std::string fingerprint() const;

 private:
  std::unordered_set<std::string> words_;
};

std::vector<Token> filter_stopwords(const std::vector<Token>& tokens, const StopwordList& stopwords);

// Normalization settings shared by evidence extraction, ranking and the
// intrinsic evaluation.
struct NormalizerConfig {
  std::shared_ptr<const StopwordList> stopwords = StopwordList::bundled();
  bool stemming = false;
};

// tokenize -> filter_stopwords -> optional stemming, returning norms only.
std::vector<std::string> content_norms(std::string_view text, const NormalizerConfig& config);

// Norms of every token (stopwords kept), optionally stemmed. Used by ROUGE.
std::vector<std::string> all_norms(std::string_view text, bool stemming = false);

}  // namespace qfs
