#pragma once

// Deterministic synthetic corpora for end-to-end checks.

#include <random>
#include <string>
#include <vector>

#include "qfs/corpus.h"
#include "qfs/evidence.h"

namespace synthetic {

inline std::string filler_word(std::mt19937_64& rng) {
  static const char* syllables[] = {"ka", "lo", "mi", "nu", "pe", "ra", "si", "to", "vu", "ze", "bo", "da"};
  std::uniform_int_distribution<int> pick(0, 11);
  return std::string(syllables[pick(rng)]) + syllables[pick(rng)] + syllables[pick(rng)];
}

inline std::string filler_sentence(std::mt19937_64& rng) {
  std::string s;
  const int n = std::uniform_int_distribution<int>(6, 10)(rng);
  for (int i = 0; i < n; ++i) {
    if (!s.empty()) s += ' ';
    s += filler_word(rng);
  }
  s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s + ".";
}

// Every document's first sentence is its gold summary; original queries
// are empty.
inline qfs::Corpus degenerate(std::size_t n, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  qfs::Corpus c;
  c.name = "degenerate";
  c.kind = qfs::CorpusKind::triad;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string first = "Report " + std::to_string(i) + " describes " + filler_sentence(rng);
    std::string doc = first;
    for (int k = 0; k < 4; ++k) doc += " " + filler_sentence(rng);
    c.samples.push_back({"deg-" + std::to_string(i), {}, doc, first, std::string()});
  }
  return c;
}

struct SeparationCorpus {
  qfs::Corpus corpus;
  std::vector<qfs::EvidenceQuery> evidence;
};

// One summary-bearing sentence per document, placed at a random position
// among filler sentences; the gold summary repeats it. Evidence queries are
// the pair-oracle keywords (they occur only in that sentence); original
// queries are random distractor words.
inline SeparationCorpus separation(std::size_t n = 20, std::uint64_t seed = 2) {
  std::mt19937_64 rng(seed);
  SeparationCorpus out;
  out.corpus.name = "separation";
  out.corpus.kind = qfs::CorpusKind::triad;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string tag = std::to_string(i);
    const std::string key = "Topic" + tag + "alpha topic" + tag + "beta was linked to finding" + tag + " outcomes.";
    const int fillers = 5;
    const int at = std::uniform_int_distribution<int>(1, fillers)(rng);
    std::string doc;
    for (int k = 0; k <= fillers; ++k) {
      if (!doc.empty()) doc += ' ';
      doc += k == at ? key : filler_sentence(rng);
    }
    const std::string distractor = filler_word(rng) + " " + filler_word(rng);
    const std::string id = "sep-" + tag;
    out.corpus.samples.push_back({id, {}, doc, key, distractor});
    qfs::EvidenceQuery q = qfs::extract_evidence(doc, key, qfs::kDefaultEvidenceCap);
    q.sample_id = id;
    out.evidence.push_back(std::move(q));
  }
  return out;
}

}  // namespace synthetic
