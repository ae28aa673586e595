#include "qfs/embed.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>

#include "qfs/corpus.h"
#include "qfs/error.h"
#include "qfs/hash.h"

namespace qfs {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t token_base(std::string_view token, std::uint64_t seed) {
  char seed_bytes[8];
  for (int i = 0; i < 8; ++i) seed_bytes[i] = static_cast<char>((seed >> (8 * i)) & 0xFF);
  return fnv1a64(token, fnv1a64(std::string_view(seed_bytes, 8)));
}

void fill_hash_vector(std::string_view token, std::uint64_t seed, std::span<double> out) {
  const std::uint64_t base = token_base(token, seed);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t h = splitmix64_mix(base + (static_cast<std::uint64_t>(i) + 1) * kGolden);
    out[i] = static_cast<double>(h >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

std::vector<double> hash_fallback_vector(std::string_view token, std::size_t dimension, std::uint64_t seed) {
  std::vector<double> v(dimension);
  fill_hash_vector(token, seed, v);
  return v;
}

EmbeddingProvider EmbeddingProvider::hash_fallback(std::size_t dimension, std::uint64_t seed) {
  if (dimension == 0) throw usage_error("embedding dimension must be at least 1");
  EmbeddingProvider p;
  p.source_ = Source::hash_fallback;
  p.dimension_ = dimension;
  p.seed_ = seed;
  p.descriptor_ = "hash_fallback(fnv1a64+splitmix64,dim=" + std::to_string(dimension) +
                  ",seed=" + std::to_string(seed) + ")";
  return p;
}

EmbeddingProvider EmbeddingProvider::from_file(const std::string& path, std::size_t expected_dimension) {
  return from_text(read_text_file(path), path, expected_dimension);
}

EmbeddingProvider EmbeddingProvider::from_text(std::string_view contents, const std::string& origin,
                                               std::size_t expected_dimension) {
  EmbeddingProvider p;
  p.source_ = Source::vector_file;
  p.dimension_ = expected_dimension;
  std::vector<double> row;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::string field;
  while (pos < contents.size()) {
    std::size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    while (!line.empty() && is_blank(line.back())) line.remove_suffix(1);
    if (line.empty()) continue;

    const std::string at = origin + ":" + std::to_string(line_no) + ": ";
    std::size_t cut = line.find_first_of(" \t");
    if (cut == std::string_view::npos) throw data_error(at + "token without vector components");
    const std::string token(line.substr(0, cut));
    row.clear();
    while (cut < line.size()) {
      while (cut < line.size() && is_blank(line[cut])) ++cut;
      if (cut >= line.size()) break;
      std::size_t stop = cut;
      while (stop < line.size() && !is_blank(line[stop])) ++stop;
      field.assign(line.substr(cut, stop - cut));
      char* end = nullptr;
      errno = 0;
      const double value = std::strtod(field.c_str(), &end);
      if (end != field.c_str() + field.size() || errno == ERANGE || !std::isfinite(value)) {
        throw data_error(at + "bad vector component '" + field + "'");
      }
      row.push_back(value);
      cut = stop;
    }
    if (p.dimension_ == 0) p.dimension_ = row.size();
    if (row.size() != p.dimension_) {
      throw data_error(at + "expected " + std::to_string(p.dimension_) + " components, found " +
                       std::to_string(row.size()));
    }
    if (p.index_.count(token) != 0) continue;
    p.index_.emplace(token, p.table_.size() / p.dimension_);
    for (double v : row) p.table_.push_back(static_cast<float>(v));
  }
  if (p.index_.empty()) throw data_error(origin + ": embedding file has no vectors");

  std::uint64_t h = kFnvOffsetBasis;
  h = fnv1a64(std::string_view(reinterpret_cast<const char*>(p.table_.data()), p.table_.size() * sizeof(float)), h);
  std::vector<std::string> tokens;
  tokens.reserve(p.index_.size());
  for (const auto& [token, slot] : p.index_) tokens.push_back(token + "#" + std::to_string(slot));
  std::sort(tokens.begin(), tokens.end());
  for (const std::string& t : tokens) h = fnv1a64(t, h);
  p.descriptor_ = "vector_file(dim=" + std::to_string(p.dimension_) + ",tokens=" + std::to_string(p.index_.size()) +
                  ",fnv=" + to_hex(h) + ")";
  return p;
}

bool EmbeddingProvider::lookup(std::string_view token, std::span<double> out) const {
  if (source_ == Source::hash_fallback) {
    fill_hash_vector(token, seed_, out);
    return true;
  }
  const auto it = index_.find(std::string(token));
  if (it == index_.end()) return false;
  const float* row = table_.data() + it->second * dimension_;
  for (std::size_t i = 0; i < dimension_; ++i) out[i] = row[i];
  return true;
}

TextVector embed_text(const EmbeddingProvider& provider, std::span<const std::string> tokens) {
  TextVector tv;
  tv.components.assign(provider.dimension(), 0.0);
  std::vector<double> buf(provider.dimension());
  for (const std::string& t : tokens) {
    if (!provider.lookup(t, buf)) continue;
    ++tv.token_count;
    for (std::size_t i = 0; i < buf.size(); ++i) tv.components[i] += buf[i];
  }
  if (tv.token_count > 0) {
    const double n = static_cast<double>(tv.token_count);
    for (double& c : tv.components) c /= n;
  }
  return tv;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = std::min(a.size(), b.size());
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double sim = dot / (std::sqrt(na) * std::sqrt(nb));
  if (!std::isfinite(sim)) return 0.0;
  return std::clamp(sim, -1.0, 1.0);
}

}  // namespace qfs
