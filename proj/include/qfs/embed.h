#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qfs {

// Deterministic pseudo-random token vector, fully specified so ports agree:
//
//   base = FNV-1a-64(seed as 8 little-endian bytes || token UTF-8 bytes)
//   h_i  = SplitMix64-mix(base + (i + 1) * 0x9E3779B97F4A7C15)   (mod 2^64)
//   v_i  = (h_i >> 11) * 2^-53 * 2 - 1                          in [-1, 1)
std::vector<double> hash_fallback_vector(std::string_view token, std::size_t dimension, std::uint64_t seed);

class EmbeddingProvider {
 public:
  enum class Source { vector_file, hash_fallback };

  // GloVe-style text file: "token f1 f2 ... fd" per line. The dimension is
  // taken from the first line unless `expected_dimension` is non-zero; every
  // line must match it. Later duplicates of a token are ignored.
  static EmbeddingProvider from_file(const std::string& path, std::size_t expected_dimension = 0);
  static EmbeddingProvider from_text(std::string_view contents, const std::string& origin,
                                     std::size_t expected_dimension = 0);
  static EmbeddingProvider hash_fallback(std::size_t dimension, std::uint64_t seed);

  std::size_t dimension() const { return dimension_; }
  Source source() const { return source_; }
  std::size_t vocabulary_size() const { return index_.size(); }

  // Writes the token vector into `out` (size == dimension()) and returns
  // true, or returns false for an out-of-vocabulary token. Never fails in
  // hash_fallback mode.
  bool lookup(std::string_view token, std::span<double> out) const;

  // Stable description that changes whenever lookups could change.
  const std::string& descriptor() const { return descriptor_; }

 private:
  EmbeddingProvider() = default;

  Source source_ = Source::hash_fallback;
  std::size_t dimension_ = 0;
  std::uint64_t seed_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<float> table_;
  std::string descriptor_;
};

struct TextVector {
  std::vector<double> components;
  std::size_t token_count = 0;
};

// Mean of the in-vocabulary token vectors. Empty or all-OOV input gives the
// zero vector with token_count 0.
TextVector embed_text(const EmbeddingProvider& provider, std::span<const std::string> tokens);

// dot(a, b) / (|a| |b|), clamped to [-1, 1]; 0 when either norm is zero.
double cosine_similarity(std::span<const double> a, std::span<const double> b);
inline double cosine_similarity(const TextVector& a, const TextVector& b) {
  return cosine_similarity(a.components, b.components);
}

}  // namespace qfs
