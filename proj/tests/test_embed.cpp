#include <cmath>
#include <random>

#include "doctest.h"
#include "qfs/embed.h"
#include "qfs/error.h"
#include "qfs/hash.h"

using doctest::Approx;
using Words = std::vector<std::string>;

namespace {

qfs::TextVector tv(std::vector<double> c) { return {std::move(c), 1}; }

}  // namespace

TEST_CASE("hash primitives match published reference values") {
  // FNV-1a 64 test vectors.
  CHECK(qfs::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(qfs::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(qfs::fnv1a64("foobar") == 0x85944171f73967e8ULL);
  // SplitMix64 with seed 0: first output mixes 0x9E3779B97F4A7C15.
  CHECK(qfs::splitmix64_mix(0x9E3779B97F4A7C15ULL) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("hash_fallback_vector") {
  const auto a = qfs::hash_fallback_vector("asthma", 64, 7);
  CHECK(a == qfs::hash_fallback_vector("asthma", 64, 7));
  REQUIRE(a.size() == 64);
  for (double v : a) {
    CHECK(v >= -1.0);
    CHECK(v <= 1.0);
  }
  for (const char* token : {"asthma", "lung", "cancer", "memory", ""}) {
    CHECK(qfs::hash_fallback_vector(token, 16, 1) != qfs::hash_fallback_vector(token, 16, 2));
  }
  CHECK(qfs::hash_fallback_vector("asthma", 64, 7) != qfs::hash_fallback_vector("asthmb", 64, 7));
  // Prefix consistency: a shorter vector is a prefix of a longer one.
  const auto short_v = qfs::hash_fallback_vector("asthma", 8, 7);
  CHECK(std::equal(short_v.begin(), short_v.end(), a.begin()));

  // Component 0 spelled out from the documented construction.
  char seed_bytes[8] = {7, 0, 0, 0, 0, 0, 0, 0};
  const std::uint64_t base = qfs::fnv1a64("asthma", qfs::fnv1a64(std::string_view(seed_bytes, 8)));
  const std::uint64_t h = qfs::splitmix64_mix(base + 0x9E3779B97F4A7C15ULL);
  CHECK(a[0] == static_cast<double>(h >> 11) / 9007199254740992.0 * 2.0 - 1.0);
}

TEST_CASE("embed_text") {
  const auto file = qfs::EmbeddingProvider::from_text("x 1 0\ny 0 1\nz 2 2\n", "inline");
  CHECK(file.dimension() == 2);
  CHECK(file.source() == qfs::EmbeddingProvider::Source::vector_file);

  const auto empty = qfs::embed_text(file, Words{});
  CHECK(empty.token_count == 0);
  CHECK(empty.components == std::vector<double>{0.0, 0.0});

  const auto one = qfs::embed_text(file, Words{"z"});
  CHECK(one.components == std::vector<double>{2.0, 2.0});
  CHECK(one.token_count == 1);

  const auto two = qfs::embed_text(file, Words{"x", "y"});
  CHECK(two.components == std::vector<double>{0.5, 0.5});

  // OOV tokens are skipped, not averaged in as zeros.
  const auto oov = qfs::embed_text(file, Words{"x", "unknown"});
  CHECK(oov.components == std::vector<double>{1.0, 0.0});
  CHECK(oov.token_count == 1);
  CHECK(qfs::embed_text(file, Words{"nope"}).token_count == 0);

  const auto hash = qfs::EmbeddingProvider::hash_fallback(32, 3);
  CHECK(qfs::embed_text(hash, Words{"anything"}).token_count == 1);
  CHECK(qfs::embed_text(hash, Words{"anything"}).components == qfs::hash_fallback_vector("anything", 32, 3));
}

TEST_CASE("embed_text is order free") {
  const auto p = qfs::EmbeddingProvider::hash_fallback(16, 9);
  Words words = {"alpha", "beta", "gamma", "delta", "alpha"};
  const auto base = qfs::embed_text(p, words);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(words.begin(), words.end(), rng);
    const auto v = qfs::embed_text(p, words);
    for (std::size_t k = 0; k < v.components.size(); ++k) CHECK(v.components[k] == Approx(base.components[k]).epsilon(1e-12));
  }
}

TEST_CASE("vector file errors") {
  CHECK_THROWS_AS(qfs::EmbeddingProvider::from_text("x 1 0\ny 1\n", "f"), qfs::Error);
  CHECK_THROWS_AS(qfs::EmbeddingProvider::from_text("x 1 abc\n", "f"), qfs::Error);
  CHECK_THROWS_AS(qfs::EmbeddingProvider::from_text("x\n", "f"), qfs::Error);
  CHECK_THROWS_AS(qfs::EmbeddingProvider::from_text("\n\n", "f"), qfs::Error);
  CHECK_THROWS_AS(qfs::EmbeddingProvider::from_text("x 1 2\n", "f", 3), qfs::Error);
  CHECK_THROWS_AS(qfs::EmbeddingProvider::from_text("x nan 2\n", "f"), qfs::Error);
  CHECK_THROWS_AS(qfs::EmbeddingProvider::from_file("/nonexistent/vectors.txt"), qfs::Error);
  CHECK_THROWS_AS(qfs::EmbeddingProvider::hash_fallback(0, 1), qfs::Error);

  const auto dup = qfs::EmbeddingProvider::from_text("x 1 0\r\nx 0 1\r\n", "f");
  CHECK(dup.vocabulary_size() == 1);
  std::vector<double> out(2);
  CHECK(dup.lookup("x", out));
  CHECK(out == std::vector<double>{1.0, 0.0});

  CHECK(qfs::EmbeddingProvider::from_text("x 1 0\n", "f").descriptor() !=
        qfs::EmbeddingProvider::from_text("x 1 0.5\n", "f").descriptor());
}

TEST_CASE("cosine_similarity: examples") {
  CHECK(qfs::cosine_similarity(tv({0.3, -2.0, 5.0}), tv({0.3, -2.0, 5.0})) == Approx(1.0).epsilon(1e-9));
  CHECK(qfs::cosine_similarity(tv({1, 0}), tv({0, 1})) == 0.0);
  CHECK(qfs::cosine_similarity(tv({1, 1}), tv({1, 0})) == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-4));
  CHECK(qfs::cosine_similarity(tv({0, 0}), tv({1, 0})) == 0.0);
  CHECK(qfs::cosine_similarity(tv({1, 0}), tv({-2, 0})) == Approx(-1.0));
}

TEST_CASE("cosine_similarity: properties") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-5, 5);
  std::uniform_real_distribution<double> scale(0.001, 1000);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<double> a(8), b(8);
    for (auto& x : a) x = u(rng);
    for (auto& x : b) x = u(rng);
    const double ab = qfs::cosine_similarity(a, b);
    CHECK(std::isfinite(ab));
    CHECK(ab >= -1.0);
    CHECK(ab <= 1.0);
    CHECK(ab == qfs::cosine_similarity(b, a));
    CHECK(qfs::cosine_similarity(a, a) == Approx(1.0).epsilon(1e-9));
    const double c = scale(rng);
    std::vector<double> sa = a;
    for (auto& x : sa) x *= c;
    CHECK(qfs::cosine_similarity(sa, b) == Approx(ab).epsilon(1e-9));
  }
}
