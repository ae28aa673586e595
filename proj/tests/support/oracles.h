#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the code paths it is used to check beyond tokenization.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qfs/textnorm.h"

namespace oracle {

inline std::vector<std::string> content(const std::string& text) {
  const auto stop = qfs::StopwordList::bundled();
  std::vector<std::string> out;
  for (const qfs::Token& t : qfs::tokenize(text)) {
    if (!stop->contains(t.norm)) out.push_back(t.norm);
  }
  return out;
}

// Set intersection by nested scan, kept in document order, deduplicated,
// truncated to cap.
inline std::vector<std::string> evidence(const std::string& document, const std::string& summary, std::size_t cap) {
  const std::vector<std::string> d = content(document);
  const std::vector<std::string> s = content(summary);
  std::vector<std::string> out;
  for (const std::string& w : d) {
    bool in_summary = false;
    for (const std::string& x : s) in_summary = in_summary || x == w;
    bool dup = false;
    for (const std::string& y : out) dup = dup || y == w;
    if (in_summary && !dup) out.push_back(w);
  }
  if (out.size() > cap) out.resize(cap);
  return out;
}

// Exponential recursive LCS; only for short sequences.
inline std::size_t lcs_recursive(const std::vector<std::string>& a, std::size_t i, const std::vector<std::string>& b,
                                 std::size_t j) {
  if (i == a.size() || j == b.size()) return 0;
  if (a[i] == b[j]) return 1 + lcs_recursive(a, i + 1, b, j + 1);
  return std::max(lcs_recursive(a, i + 1, b, j), lcs_recursive(a, i, b, j + 1));
}

inline std::size_t lcs(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return lcs_recursive(a, 0, b, 0);
}

using Gram = std::vector<std::string>;

inline std::map<Gram, std::size_t> ngrams(const std::vector<std::string>& t, std::size_t n) {
  std::map<Gram, std::size_t> out;
  for (std::size_t i = 0; i + n <= t.size(); ++i) ++out[Gram(t.begin() + i, t.begin() + i + n)];
  return out;
}

// Unigram pairs with a begin marker plus every ordered pair with gap 1..4.
inline std::map<Gram, std::size_t> skip_bigrams(const std::vector<std::string>& t) {
  std::map<Gram, std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    ++out[{"\x01<s>", t[i]}];
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (j - i <= 4) ++out[{t[i], t[j]}];
    }
  }
  return out;
}

struct Prf {
  double p = 0, r = 0, f = 0;
};

inline Prf from_maps(const std::map<Gram, std::size_t>& c, const std::map<Gram, std::size_t>& r) {
  std::size_t overlap = 0, ct = 0, rt = 0;
  for (const auto& [g, n] : c) {
    ct += n;
    auto it = r.find(g);
    if (it != r.end()) overlap += std::min(n, it->second);
  }
  for (const auto& [g, n] : r) rt += n;
  Prf out;
  if (ct == 0 || rt == 0) return out;
  out.p = double(overlap) / double(ct);
  out.r = double(overlap) / double(rt);
  out.f = out.p + out.r > 0 ? 2 * out.p * out.r / (out.p + out.r) : 0;
  return out;
}

}  // namespace oracle
