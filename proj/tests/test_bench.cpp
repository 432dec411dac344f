#include <gtest/gtest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>

#include "simstego/bench.hpp"
#include "simstego/error.hpp"
#include "test_support.hpp"

using namespace simstego;

namespace {

struct TempCorpus {
  std::filesystem::path root;
  TempCorpus() {
    root = std::filesystem::temp_directory_path() / ("simstego-bench-" + std::to_string(::getpid()));
    std::filesystem::create_directories(root / "covers");
    std::filesystem::create_directories(root / "secrets");
  }
  ~TempCorpus() { std::filesystem::remove_all(root); }
};

std::vector<std::vector<std::string>> parse_csv(const std::string& text, std::string& schema) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, schema);
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  EXPECT_NE(it, header.end()) << name;
  return static_cast<std::size_t>(it - header.begin());
}

void check_shape(const std::vector<std::vector<std::string>>& rows) {
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) EXPECT_EQ(r.size(), rows[0].size());
}

BenchConfig small_config(const TempCorpus& c) {
  BenchConfig cfg;
  cfg.cover_dir = c.root / "covers";
  cfg.secret_dir = c.root / "secrets";
  cfg.seed = 7;
  cfg.jobs = 2;
  return cfg;
}

}  // namespace

class BenchTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(81);
    write_pgm_file(corpus.root / "covers" / "a.pgm", support::smooth_image(rng, 96, 96));
    write_pgm_file(corpus.root / "covers" / "b.pgm", support::uniform_image(rng, 96, 96));
    write_pgm_file(corpus.root / "secrets" / "s.pgm", support::smooth_image(rng, 32, 32));
  }
  TempCorpus corpus;
};

TEST_F(BenchTest, EmbeddingBenchIsDeterministic) {
  auto cfg = small_config(corpus);
  const auto a = run_embedding_bench(cfg);
  cfg.jobs = 1;
  const auto b = run_embedding_bench(cfg);
  EXPECT_EQ(a, b);
  std::string schema;
  const auto rows = parse_csv(a, schema);
  EXPECT_EQ(schema, kEmbeddingSchema);
  check_shape(rows);
  const auto& header = rows[0];
  const auto method = column(header, "method");
  const auto ee = column(header, "ee");
  const auto ok = column(header, "round_trip_ok");
  const auto rate = column(header, "rate");
  std::size_t lsbr_rows = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][ok], "1") << i;
    if (rows[i][method] == "lsbr" && rows[i][rate] == "1.00") {
      EXPECT_NEAR(std::stod(rows[i][ee]), 2.0, 0.1);
      ++lsbr_rows;
    }
  }
  EXPECT_GT(lsbr_rows, 0U);
  // 2 covers x 1 secret x 7 methods x 5 rates.
  EXPECT_EQ(rows.size(), 1U + 2 * 7 * 5);
}

TEST_F(BenchTest, TransformStatsOnConstantCorpus) {
  write_pgm_file(corpus.root / "secrets" / "flat.pgm", GrayImage(16, 16, 12));
  const auto out = run_transform_stats(small_config(corpus));
  std::string schema;
  const auto rows = parse_csv(out, schema);
  EXPECT_EQ(schema, kTransformSchema);
  check_shape(rows);
  const auto file = column(rows[0], "file");
  const auto transform = column(rows[0], "transform");
  const auto after = column(rows[0], "zero_after");
  bool seen = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][file] == "flat.pgm" && rows[i][transform] == "sim") {
      EXPECT_DOUBLE_EQ(std::stod(rows[i][after]), 1.0);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

TEST_F(BenchTest, DetectorBenchShape) {
  auto cfg = small_config(corpus);
  cfg.methods = {Method::Lsbr, Method::EbSim};
  cfg.rates = {0.5, 1.0};
  const auto a = run_detector_bench(cfg);
  EXPECT_EQ(a, run_detector_bench(cfg));
  std::string schema;
  const auto rows = parse_csv(a, schema);
  EXPECT_EQ(schema, kDetectorSchema);
  check_shape(rows);
  const auto method = column(rows[0], "method");
  bool cover_rows = false;
  for (std::size_t i = 1; i < rows.size(); ++i) cover_rows |= rows[i][method] == "cover";
  EXPECT_TRUE(cover_rows);
}

TEST(Bench, ValidateRejectsBadConfig) {
  BenchConfig cfg;
  cfg.cover_dir = "/nonexistent";
  cfg.secret_dir = "/nonexistent";
  EXPECT_THROW(validate(cfg), Error);
  cfg.cover_dir = support::fixture("covers");
  cfg.secret_dir = support::fixture("secrets");
  EXPECT_NO_THROW(validate(cfg));
  cfg.rates = {1.5};
  EXPECT_THROW(validate(cfg), Error);
}

TEST(Bench, EmbedAtRateRoundTrips) {
  const auto cover = read_pgm_file(support::fixture("covers/clock.pgm"));
  const auto secret = read_pgm_file(support::fixture("secrets/cell.pgm"));
  for (auto method : kAllMethods) {
    for (double rate : {0.2, 1.0}) {
      const auto r = embed_at_rate(cover, secret, method, rate, 3);
      EXPECT_TRUE(r.round_trip_ok) << method_name(method) << " " << rate;
      EXPECT_GT(r.payload.size(), 0U);
    }
  }
}
