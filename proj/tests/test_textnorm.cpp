#include <fstream>
#include <random>

#include "doctest.h"
#include "qfs/error.h"
#include "qfs/textnorm.h"
#include "support/gen.h"

using qfs::Token;

namespace {

std::vector<std::string> norms(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.norm);
  return out;
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<Token> from_norms(const std::vector<std::string>& words) {
  std::vector<Token> out;
  for (const auto& w : words) out.push_back({w, w, 0, 0});
  return out;
}

}  // namespace

TEST_CASE("tokenize: examples") {
  CHECK(qfs::tokenize("").empty());
  CHECK(qfs::tokenize("   \n\t ").empty());

  const auto t = qfs::tokenize("Asthma causes.");
  CHECK(surfaces(t) == std::vector<std::string>{"Asthma", "causes."});
  CHECK(norms(t) == std::vector<std::string>{"asthma", "causes"});
  CHECK(t[0].begin == 0);
  CHECK(t[0].end == 6);
  CHECK(t[1].begin == 7);
  CHECK(t[1].end == 14);

  CHECK(norms(qfs::tokenize("lung-cancer risk")) == std::vector<std::string>{"lung-cancer", "risk"});
  CHECK(norms(qfs::tokenize("alzheimer's (symptoms)")) == std::vector<std::string>{"alzheimer's", "symptoms"});
  CHECK(norms(qfs::tokenize("Non-small cell -- lung")) == std::vector<std::string>{"non-small", "cell", "lung"});
}

TEST_CASE("tokenize: unicode whitespace and punctuation") {
  // NBSP and ideographic space separate; curly quotes and em dash are stripped.
  const auto t = qfs::tokenize("\xE2\x80\x9C" "Asthma\xE2\x80\x9D\xC2\xA0" "causes\xE3\x80\x80" "air\xE2\x80\x94");
  CHECK(norms(t) == std::vector<std::string>{"asthma", "causes", "air"});
  // Non-ASCII letters are kept as-is.
  CHECK(norms(qfs::tokenize("Caf\xC3\xA9" "!")) == std::vector<std::string>{"caf\xC3\xA9"});
}

TEST_CASE("tokenize: properties on random text") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    const std::string text = gen::document(rng);
    const auto tokens = qfs::tokenize(text);
    std::size_t last_end = 0;
    for (const Token& t : tokens) {
      CHECK_FALSE(t.norm.empty());
      CHECK(t.begin >= last_end);
      CHECK(t.end > t.begin);
      CHECK(text.substr(t.begin, t.end - t.begin) == t.surface);
      last_end = t.end;
      // Idempotent on normalized single tokens.
      const auto again = qfs::tokenize(t.norm);
      REQUIRE(again.size() == 1);
      CHECK(again[0].norm == t.norm);
    }
  }
}

TEST_CASE("filter_stopwords") {
  const auto stop = qfs::StopwordList::bundled();
  const auto kept = qfs::filter_stopwords(from_norms({"the", "cat", "sat", "on", "the", "mat"}), *stop);
  CHECK(norms(kept) == std::vector<std::string>{"cat", "sat", "mat"});
  CHECK(qfs::filter_stopwords(from_norms({"the", "a", "of", "is"}), *stop).empty());
  const std::vector<std::string> plain = {"asthma", "chronic", "disease"};
  CHECK(norms(qfs::filter_stopwords(from_norms(plain), *stop)) == plain);
}

TEST_CASE("filter_stopwords keeps a subsequence") {
  std::mt19937_64 rng(5);
  const auto stop = qfs::StopwordList::bundled();
  for (int iter = 0; iter < 200; ++iter) {
    const auto tokens = qfs::tokenize(gen::document(rng));
    const auto kept = qfs::filter_stopwords(tokens, *stop);
    std::size_t j = 0;
    for (const Token& t : tokens) {
      if (j < kept.size() && kept[j].begin == t.begin) ++j;
    }
    CHECK(j == kept.size());
    for (const Token& t : kept) CHECK_FALSE(stop->contains(t.norm));
  }
}

TEST_CASE("bundled stopword list matches the data file") {
  const auto bundled = qfs::StopwordList::bundled();
  const auto file = qfs::StopwordList::from_file(QFS_DATA_DIR "/stopwords_en.txt");
  CHECK(bundled->size() == 179);
  CHECK(file->size() == bundled->size());
  CHECK(file->fingerprint() == bundled->fingerprint());
  CHECK_THROWS_AS(qfs::StopwordList::from_file("/nonexistent/stopwords.txt"), qfs::Error);
}

TEST_CASE("split_sentences: examples") {
  CHECK(qfs::split_sentences("One. Two.").size() == 2);
  CHECK(qfs::split_sentences("no terminator here").size() == 1);
  CHECK(qfs::split_sentences("").empty());

  const auto s = qfs::split_sentences("Dr. Smith agreed. It worked.");
  REQUIRE(s.size() == 2);
  CHECK(s[0].text == "Dr. Smith agreed.");
  CHECK(s[1].text == "It worked.");
  CHECK(s[1].index == 1);

  CHECK(qfs::split_sentences("The U.S. Army agreed. It rained.").size() == 2);
  CHECK(qfs::split_sentences("He said \"Stop!\" Then he left.").size() == 2);
  CHECK(qfs::split_sentences("It cost 3.5 dollars. 42 people came.").size() == 2);
  CHECK(qfs::split_sentences("lowercase. next").size() == 1);
  CHECK(qfs::split_sentences("J. Smith wrote it.").size() == 1);
}

TEST_CASE("split_sentences partitions the non-whitespace content") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 500; ++iter) {
    const std::string text = "  " + gen::document(rng) + " \n";
    const auto sentences = qfs::split_sentences(text);
    std::vector<int> owner(text.size(), -1);
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      const auto& s = sentences[i];
      CHECK(s.index == i);
      CHECK(text.substr(s.begin, s.end - s.begin) == s.text);
      for (std::size_t b = s.begin; b < s.end; ++b) {
        CHECK(owner[b] == -1);
        owner[b] = static_cast<int>(i);
      }
    }
    for (std::size_t b = 0; b < text.size(); ++b) {
      if (!std::isspace(static_cast<unsigned char>(text[b]))) CHECK(owner[b] != -1);
    }
    // Sentence tokens are exactly the document tokens.
    std::size_t total = 0;
    for (const auto& s : sentences) total += s.tokens.size();
    CHECK(total == qfs::tokenize(text).size());
  }
}

TEST_CASE("light_stem") {
  CHECK(qfs::light_stem("dermatitis") == "dermatiti");
  CHECK(qfs::light_stem("causes") == "caus");
  CHECK(qfs::light_stem("screening") == "screen");
  CHECK(qfs::light_stem("sing") == "sing");
  CHECK(qfs::light_stem("class") == "class");
  CHECK(qfs::light_stem("cats") == "cats");
  CHECK(qfs::light_stem("lungs") == "lung");

  qfs::NormalizerConfig cfg;
  cfg.stemming = true;
  CHECK(qfs::content_norms("The patients were screening lungs", cfg) ==
        std::vector<std::string>{"patient", "screen", "lung"});
}
