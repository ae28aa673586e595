#include <algorithm>
#include <random>

#include "doctest.h"
#include "qfs/rank.h"
#include "support/gen.h"

using Words = std::vector<std::string>;

namespace {

const qfs::EmbeddingProvider& hash_provider() {
  static const auto p = qfs::EmbeddingProvider::hash_fallback(64, 7);
  return p;
}

qfs::EvidenceQuery query(Words words) { return {"s", std::move(words), qfs::QuerySource::pair_oracle}; }

qfs::RankedDocument make_ranked(const std::vector<std::pair<std::string, std::size_t>>& entries) {
  qfs::RankedDocument r;
  double sim = 1.0;
  for (const auto& [text, idx] : entries) {
    r.entries.push_back({text, idx, sim, qfs::tokenize(text).size()});
    sim -= 0.1;
  }
  return r;
}

std::size_t word_count(const std::string& s) { return qfs::tokenize(s).size(); }

}  // namespace

TEST_CASE("rank_sentences: examples") {
  const auto single = qfs::rank_sentences("Only one sentence here.", query({"unrelated"}), hash_provider());
  REQUIRE(single.entries.size() == 1);
  CHECK(single.entries[0].orig_index == 0);

  // Oracle: direct cosine between the query vector and each sentence's mean
  // content-word vector.
  const std::string doc = "Weather was fine. Asthma is chronic.";
  const auto v = [](const char* w) { return qfs::hash_fallback_vector(w, 64, 7); };
  const auto mean2 = [](std::vector<double> a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) / 2;
    return a;
  };
  const double sim_weather = qfs::cosine_similarity(v("asthma"), mean2(v("weather"), v("fine")));
  const double sim_asthma = qfs::cosine_similarity(v("asthma"), mean2(v("asthma"), v("chronic")));
  REQUIRE(sim_asthma > sim_weather);
  const auto ranked = qfs::rank_sentences(doc, query({"asthma"}), hash_provider());
  REQUIRE(ranked.entries.size() == 2);
  CHECK(ranked.entries[0].text == "Asthma is chronic.");
  CHECK(ranked.entries[0].orig_index == 1);
  CHECK(ranked.entries[0].similarity == doctest::Approx(sim_asthma).epsilon(1e-12));
  CHECK(ranked.entries[1].similarity == doctest::Approx(sim_weather).epsilon(1e-12));

  const auto twins = qfs::rank_sentences("Same words. Same words.", query({"words"}), hash_provider());
  CHECK(twins.entries[0].orig_index == 0);
  CHECK(twins.entries[1].orig_index == 1);

  const auto empty = qfs::rank_sentences("A b. C d. E f.", query({}), hash_provider());
  for (std::size_t i = 0; i < empty.entries.size(); ++i) {
    CHECK(empty.entries[i].orig_index == i);
    CHECK(empty.entries[i].similarity == 0.0);
  }
}

TEST_CASE("build_model_input") {
  const auto ranked = make_ranked({{"One two three four five.", 2}, {"Six seven eight nine ten.", 0},
                                   {"Eleven twelve thirteen fourteen fifteen.", 1}});
  const auto q = query({"cat", "mat"});
  CHECK(qfs::build_model_input(ranked, q, 12, false) == "One two three four five. Six seven eight nine ten.");
  CHECK(qfs::build_model_input(ranked, q, 1000, false) ==
        "One two three four five. Six seven eight nine ten. Eleven twelve thirteen fourteen fifteen.");
  CHECK(qfs::build_model_input(ranked, q, 3, false) == "One two three");
  CHECK(qfs::build_model_input(ranked, q, 5, true) == "cat mat </q> One two three four five.");
  CHECK(qfs::build_model_input(ranked, query({}), 5, true) == "</q> One two three four five.");

  const std::string small = qfs::build_model_input(ranked, q, 7, false);
  const std::string large = qfs::build_model_input(ranked, q, 11, false);
  CHECK(large.rfind(small, 0) == 0);
}

TEST_CASE("extractive_summary") {
  const auto ranked = make_ranked({{"D.", 3}, {"A.", 0}, {"B.", 1}, {"C.", 2}});
  CHECK(qfs::extractive_summary(ranked, 1) == "D.");
  CHECK(qfs::extractive_summary(ranked, 2) == "A. D.");
  CHECK(qfs::extractive_summary(ranked, 4) == "A. B. C. D.");
  CHECK(qfs::extractive_summary(ranked, 10) == "A. B. C. D.");
}

TEST_CASE("budget_view") {
  const auto ranked = make_ranked({{"a b c.", 0}, {"d e.", 1}, {"f g h i.", 2}});
  CHECK(ranked.budget_view(2).empty());
  CHECK(ranked.budget_view(3).size() == 1);
  CHECK(ranked.budget_view(5).size() == 2);
  CHECK(ranked.budget_view(8).size() == 2);
  CHECK(ranked.budget_view(9).size() == 3);
}

TEST_CASE("ranking properties on random documents") {
  std::mt19937_64 rng(43);
  const auto& provider = hash_provider();
  for (int iter = 0; iter < 300; ++iter) {
    const std::string doc = gen::document(rng, 1, 10);
    const Words kw = qfs::content_norms(gen::sentence(rng, 1, 4), {});
    const auto ranked = qfs::rank_sentences(doc, query(kw), provider);
    const auto sentences = qfs::split_sentences(doc);

    std::vector<std::size_t> idx;
    for (const auto& e : ranked.entries) idx.push_back(e.orig_index);
    std::sort(idx.begin(), idx.end());
    REQUIRE(idx.size() == sentences.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      CHECK(idx[i] == i);
    }
    for (const auto& e : ranked.entries) CHECK(e.text == sentences[e.orig_index].text);
    for (std::size_t i = 1; i < ranked.entries.size(); ++i) {
      const auto& p = ranked.entries[i - 1];
      const auto& q = ranked.entries[i];
      CHECK(p.similarity >= q.similarity);
      if (p.similarity == q.similarity) CHECK(p.orig_index < q.orig_index);
    }

    const std::size_t b1 = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const std::size_t b2 = b1 + std::uniform_int_distribution<std::size_t>(0, 40)(rng);
    const std::string s1 = qfs::build_model_input(ranked, query(kw), b1, false);
    const std::string s2 = qfs::build_model_input(ranked, query(kw), b2, false);
    CHECK(s2.rfind(s1, 0) == 0);
    CHECK(word_count(s1) <= b1);
    CHECK(word_count(s2) <= b2);
    const std::string pre = qfs::build_model_input(ranked, query(kw), b1, true);
    CHECK(word_count(pre) <= b1 + kw.size() + 1);
  }
}

TEST_CASE("ranked JSONL round trip keeps order and similarities") {
  auto ranked = qfs::rank_sentences("Lung cancer spreads. Weather is mild. Cancer screening helps.",
                                    query({"cancer", "screening"}), hash_provider());
  ranked.sample_id = "x";
  const std::string input = "model input";
  const std::string line = qfs::serialize_ranked(ranked, &input);
  CHECK(line.find("\"model_input\":\"model input\"") != std::string::npos);
  const auto back = qfs::parse_ranked(line);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == ranked);
  CHECK(qfs::serialize_ranked(back[0], &input) == line);
}
