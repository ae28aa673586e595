#include "qfs/textnorm.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "qfs/error.h"
#include "qfs/hash.h"

namespace qfs {

namespace {

struct CodePoint {
  char32_t value;
  std::size_t begin;
  std::size_t end;
};

// Decodes one UTF-8 sequence starting at `pos`. Malformed bytes decode as a
// single replacement-like code point so they still count as word content.
CodePoint decode_at(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  std::size_t len = 1;
  char32_t cp = lead;
  if (lead >= 0xF0 && lead < 0xF8) {
    len = 4;
    cp = lead & 0x07;
  } else if (lead >= 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if (lead >= 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  }
  if (len > 1) {
    if (pos + len > text.size()) return {0xFFFD, pos, pos + 1};
    for (std::size_t i = 1; i < len; ++i) {
      if ((byte(pos + i) & 0xC0) != 0x80) return {0xFFFD, pos, pos + 1};
      cp = (cp << 6) | (byte(pos + i) & 0x3F);
    }
  } else if (lead >= 0x80) {
    cp = 0xFFFD;
  }
  return {cp, pos, pos + len};
}

std::vector<CodePoint> decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    out.push_back(decode_at(text, pos));
    pos = out.back().end;
  }
  return out;
}

bool is_space(char32_t c) {
  switch (c) {
    case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool is_punct(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  switch (c) {
    case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB: case 0xBF:
    case 0x3001: case 0x3002: case 0x300C: case 0x300D:
      return true;
    default:
      return c >= 0x2010 && c <= 0x2027;
  }
}

bool is_closer(char32_t c) {
  switch (c) {
    case U'"': case U'\'': case U')': case U']': case U'}':
    case 0x2019: case 0x201D: case 0xBB:
      return true;
    default:
      return false;
  }
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> set = {
      "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "mt", "vs", "etc",
      "inc", "ltd", "co", "corp", "gen", "gov", "sen", "rep", "lt", "col",
      "capt", "sgt", "fig", "al", "approx", "dept", "jan", "feb", "aug",
      "sept", "oct", "nov", "dec"};
  return set;
}

// True when the period at `dot` ends an abbreviation rather than a sentence.
bool is_abbreviation_period(std::string_view text, std::size_t dot) {
  std::size_t start = dot;
  while (start > 0) {
    const char c = text[start - 1];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') break;
    --start;
  }
  std::string_view word = text.substr(start, dot - start);
  while (!word.empty() && (word.front() == '(' || word.front() == '"' || word.front() == '\'' ||
                           word.front() == '[')) {
    word.remove_prefix(1);
  }
  if (word.empty()) return false;
  const std::string lower = ascii_lower(word);
  if (lower.size() == 1 && lower[0] >= 'a' && lower[0] <= 'z') return true;
  if (abbreviations().count(lower) != 0) return true;
  // Dotted forms such as "U.S" or "e.g": every segment one or two letters.
  if (lower.find('.') != std::string::npos) {
    std::stringstream ss(lower);
    std::string part;
    while (std::getline(ss, part, '.')) {
      if (part.empty() || part.size() > 2) return false;
      for (char c : part) {
        if (c < 'a' || c > 'z') return false;
      }
    }
    return true;
  }
  return false;
}

constexpr const char* kBundledStopwords[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "you're",
    "you've", "you'll", "you'd", "your", "yours", "yourself", "yourselves", "he", "him",
    "his", "himself", "she", "she's", "her", "hers", "herself", "it", "it's", "its",
    "itself", "they", "them", "their", "theirs", "themselves", "what", "which", "who",
    "whom", "this", "that", "that'll", "these", "those", "am", "is", "are", "was", "were",
    "be", "been", "being", "have", "has", "had", "having", "do", "does", "did", "doing",
    "a", "an", "the", "and", "but", "if", "or", "because", "as", "until", "while", "of",
    "at", "by", "for", "with", "about", "against", "between", "into", "through", "during",
    "before", "after", "above", "below", "to", "from", "up", "down", "in", "out", "on",
    "off", "over", "under", "again", "further", "then", "once", "here", "there", "when",
    "where", "why", "how", "all", "any", "both", "each", "few", "more", "most", "other",
    "some", "such", "no", "nor", "not", "only", "own", "same", "so", "than", "too",
    "very", "s", "t", "can", "will", "just", "don", "don't", "should", "should've", "now",
    "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't",
    "didn", "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn", "hasn't", "haven",
    "haven't", "isn", "isn't", "ma", "mightn", "mightn't", "mustn", "mustn't", "needn",
    "needn't", "shan", "shan't", "shouldn", "shouldn't", "wasn", "wasn't", "weren",
    "weren't", "won", "won't", "wouldn", "wouldn't",
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  const std::vector<CodePoint> cps = decode(text);
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_space(cps[i].value)) ++i;
    if (i == cps.size()) break;
    std::size_t j = i;
    while (j < cps.size() && !is_space(cps[j].value)) ++j;
    std::size_t lo = i;
    std::size_t hi = j;
    while (lo < hi && is_punct(cps[lo].value)) ++lo;
    while (hi > lo && is_punct(cps[hi - 1].value)) --hi;
    if (lo < hi) {
      Token tok;
      tok.begin = cps[i].begin;
      tok.end = cps[j - 1].end;
      tok.surface = std::string(text.substr(tok.begin, tok.end - tok.begin));
      tok.norm = ascii_lower(text.substr(cps[lo].begin, cps[hi - 1].end - cps[lo].begin));
      tokens.push_back(std::move(tok));
    }
    i = j;
  }
  return tokens;
}

SentenceList split_sentences(std::string_view text) {
  const std::vector<CodePoint> cps = decode(text);
  std::vector<std::pair<std::size_t, std::size_t>> spans;  // code point index ranges

  std::size_t start = 0;
  while (start < cps.size() && is_space(cps[start].value)) ++start;
  for (std::size_t i = start; i < cps.size(); ++i) {
    const char32_t c = cps[i].value;
    if (c != U'.' && c != U'?' && c != U'!') continue;
    std::size_t j = i + 1;
    while (j < cps.size() && (cps[j].value == U'.' || cps[j].value == U'?' || cps[j].value == U'!')) ++j;
    while (j < cps.size() && is_closer(cps[j].value)) ++j;
    if (j >= cps.size() || !is_space(cps[j].value)) continue;
    std::size_t k = j;
    while (k < cps.size() && is_space(cps[k].value)) ++k;
    if (k == cps.size()) continue;
    const char32_t next = cps[k].value;
    const bool opens = (next >= U'A' && next <= U'Z') || (next >= U'0' && next <= U'9');
    if (!opens) continue;
    if (c == U'.' && j == i + 1 && is_abbreviation_period(text, cps[i].begin)) continue;
    spans.emplace_back(start, j);
    start = k;
    i = k - 1;
  }
  if (start < cps.size()) {
    std::size_t end = cps.size();
    while (end > start && is_space(cps[end - 1].value)) --end;
    spans.emplace_back(start, end);
  }

  SentenceList sentences;
  sentences.reserve(spans.size());
  for (const auto& [lo, hi] : spans) {
    Sentence s;
    s.index = sentences.size();
    s.begin = cps[lo].begin;
    s.end = cps[hi - 1].end;
    s.text = std::string(text.substr(s.begin, s.end - s.begin));
    s.tokens = tokenize(s.text);
    for (Token& t : s.tokens) {
      t.begin += s.begin;
      t.end += s.begin;
    }
    sentences.push_back(std::move(s));
  }
  return sentences;
}

std::string light_stem(std::string_view norm) {
  const auto ends_with = [&](std::string_view suffix) {
    return norm.size() >= suffix.size() && norm.substr(norm.size() - suffix.size()) == suffix;
  };
  constexpr std::size_t kMinStem = 4;
  if (ends_with("ing") && norm.size() - 3 >= kMinStem) return std::string(norm.substr(0, norm.size() - 3));
  if (ends_with("es") && norm.size() - 2 >= kMinStem) return std::string(norm.substr(0, norm.size() - 2));
  if (ends_with("s") && !ends_with("ss") && norm.size() - 1 >= kMinStem) {
    return std::string(norm.substr(0, norm.size() - 1));
  }
  return std::string(norm);
}

std::shared_ptr<const StopwordList> StopwordList::bundled() {
  static const std::shared_ptr<const StopwordList> list = [] {
    std::vector<std::string> words(std::begin(kBundledStopwords), std::end(kBundledStopwords));
    return from_words(words);
  }();
  return list;
}

std::shared_ptr<const StopwordList> StopwordList::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read stopword list: " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    std::size_t lead = line.find_first_not_of(" \t");
    if (lead == std::string::npos || line[lead] == '#') continue;
    words.push_back(ascii_lower(line.substr(lead)));
  }
  return from_words(words);
}

std::shared_ptr<const StopwordList> StopwordList::from_words(const std::vector<std::string>& words) {
  auto list = std::make_shared<StopwordList>();
  list->words_.insert(words.begin(), words.end());
  return list;
}

bool StopwordList::contains(std::string_view norm) const {
  return words_.count(std::string(norm)) != 0;
}

std::string StopwordList::fingerprint() const {
  std::vector<std::string> sorted(words_.begin(), words_.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t h = kFnvOffsetBasis;
  for (const std::string& w : sorted) {
    h = fnv1a64(w, h);
    h = fnv1a64("\n", h);
  }
  return to_hex(h);
}

std::vector<Token> filter_stopwords(const std::vector<Token>& tokens, const StopwordList& stopwords) {
  std::vector<Token> kept;
  kept.reserve(tokens.size());
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(kept),
               [&](const Token& t) { return !stopwords.contains(t.norm); });
  return kept;
}

std::vector<std::string> content_norms(std::string_view text, const NormalizerConfig& config) {
  std::vector<std::string> norms;
  for (const Token& t : tokenize(text)) {
    if (config.stopwords && config.stopwords->contains(t.norm)) continue;
    norms.push_back(config.stemming ? light_stem(t.norm) : t.norm);
  }
  return norms;
}

std::vector<std::string> all_norms(std::string_view text, bool stemming) {
  std::vector<std::string> norms;
  for (const Token& t : tokenize(text)) {
    norms.push_back(stemming ? light_stem(t.norm) : t.norm);
  }
  return norms;
}

}  // namespace qfs
