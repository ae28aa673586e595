#include "doctest.h"
#include "qfs/config.h"
#include "qfs/error.h"

TEST_CASE("defaults") {
  const qfs::PipelineConfig cfg;
  CHECK(cfg.evidence_cap == 6);
  CHECK(cfg.extractive_k == 2);
  CHECK(cfg.budgets.at("pegasus") == 1024);
  CHECK(cfg.budgets.at("bart") == 1024);
  CHECK(cfg.budgets.at("led") == 1024);
  CHECK(cfg.budgets.at("roberta") == 514);
  CHECK_FALSE(cfg.stemming);
  CHECK(cfg.rouge_variants.size() == 4);
}

TEST_CASE("parse_config") {
  const auto cfg = qfs::parse_config(
      "# comment\n"
      "stemming = true\n"
      "evidence_cap = 4   ; trailing\n"
      "budget.t5 = 512\n"
      "embed_dim = 32\n"
      "embed_seed = 0\n"
      "rouge_variants = R1, RSU4\n"
      "query_mode = original\n"
      "embed_file = vec.txt\n",
      "cfg", "/base");
  CHECK(cfg.stemming);
  CHECK(cfg.evidence_cap == 4);
  CHECK(cfg.budgets.size() == 1);
  CHECK(cfg.budgets.at("t5") == 512);
  CHECK(cfg.embed_dim == 32);
  CHECK(cfg.embed_seed == 0);
  CHECK(cfg.rouge_variants == std::vector<qfs::RougeVariant>{qfs::RougeVariant::R1, qfs::RougeVariant::RSU4});
  CHECK(cfg.query_mode == qfs::QueryMode::original);
  CHECK(*cfg.embed_file == "/base/vec.txt");
}

TEST_CASE("parse_config rejects bad input") {
  const auto rejects = [](const char* text, const char* needle) {
    try {
      qfs::parse_config(text, "cfg");
      FAIL("accepted: " << text);
    } catch (const qfs::Error& e) {
      CHECK(e.kind() == qfs::ErrorKind::usage);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  rejects("colour = blue\n", "unknown key 'colour'");
  rejects("evidence_cap = 0\n", "positive");
  rejects("evidence_cap = -1\n", "integer");
  rejects("evidence_cap = 3\nevidence_cap = 4\n", "cfg:2: duplicate");
  rejects("stemming = maybe\n", "true or false");
  rejects("just words\n", "key = value");
  rejects("rouge_variants = R9\n", "R9");
  rejects("query_mode = sideways\n", "sideways");
  rejects("budget.roberta = 0\n", "positive");
}

TEST_CASE("example config parses to the defaults") {
  const auto cfg = qfs::load_config(QFS_DATA_DIR "/pipeline.example.ini");
  const qfs::PipelineConfig def;
  CHECK(cfg.budgets == def.budgets);
  CHECK(cfg.evidence_cap == def.evidence_cap);
  CHECK(cfg.extractive_k == def.extractive_k);
  CHECK(cfg.embed_dim == def.embed_dim);
  CHECK(cfg.embed_seed == def.embed_seed);
  CHECK(cfg.rouge_variants == def.rouge_variants);
  const auto a = qfs::make_context(cfg);
  const auto b = qfs::make_context(def);
  CHECK(qfs::config_digest(a, "") == qfs::config_digest(b, ""));
}
