#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "simstego/error.hpp"
#include "simstego/sim.hpp"
#include "test_support.hpp"

using namespace simstego;

namespace {

unsigned binomial(unsigned n, unsigned k) {
  unsigned r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(SimCodebook, GroupsByPopcount) {
  const auto& codes = popcount_codes(8);
  ASSERT_EQ(codes.size(), 256U);
  EXPECT_EQ(std::vector<std::uint16_t>(codes.begin(), codes.begin() + 9),
            (std::vector<std::uint16_t>{0, 1, 2, 4, 8, 16, 32, 64, 128}));
  std::vector<unsigned> group(9, 0);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    ++group[static_cast<unsigned>(std::popcount(codes[i]))];
    if (i > 0) {
      const int pa = std::popcount(codes[i - 1]);
      const int pb = std::popcount(codes[i]);
      EXPECT_TRUE(pa < pb || (pa == pb && codes[i - 1] < codes[i]));
    }
  }
  for (unsigned i = 0; i <= 8; ++i) EXPECT_EQ(group[i], binomial(8, i));
  const std::set<std::uint16_t> uniq(codes.begin(), codes.end());
  EXPECT_EQ(uniq.size(), 256U);
  const auto& rank = popcount_rank(8);
  for (std::size_t i = 0; i < codes.size(); ++i) EXPECT_EQ(rank[codes[i]], i);
}

TEST(SimCodebook, WiderBooks) {
  for (unsigned b : {9U, 10U}) {
    const auto& codes = popcount_codes(b);
    ASSERT_EQ(codes.size(), std::size_t{1} << b);
    std::vector<unsigned> group(b + 1, 0);
    for (auto c : codes) ++group[static_cast<unsigned>(std::popcount(c))];
    for (unsigned i = 0; i <= b; ++i) EXPECT_EQ(group[i], binomial(b, i));
  }
}

TEST(Sim, ConstantImage) {
  const GrayImage img(4, 4, 77);
  const auto enc = sim_forward(img);
  EXPECT_EQ(enc.side_info.to_string(), "000000001" "01001101");
  ASSERT_EQ(enc.payload.size(), 128U);
  EXPECT_EQ(enc.payload.count_zeros(), 128U);
  EXPECT_EQ(sim_inverse(enc.side_info, enc.payload, 4, 4), img);
}

TEST(Sim, AllValuesGiveMaximalSideInfo) {
  const auto enc = sim_forward(support::ramp_image());
  EXPECT_EQ(enc.side_info.size(), kSimMaxSideInfoBits);
  EXPECT_EQ(kSimMaxSideInfoBits, 2057U);
}

TEST(Sim, TiesBreakByAscendingValue) {
  std::vector<std::uint8_t> px(16);
  for (std::size_t i = 0; i < 16; ++i) px[i] = i < 8 ? 20 : 10;
  const GrayImage img(4, 4, px);
  const auto enc = sim_forward(img);
  EXPECT_EQ(enc.side_info.to_string(), "000000010" "00001010" "00010100");
  BitStream payload = enc.payload;
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(payload.read_field(8), i < 8 ? 1U : 0U);
  EXPECT_EQ(sim_inverse(enc.side_info, enc.payload, 4, 4), img);
}

TEST(Sim, RankByFrequency) {
  std::vector<std::uint64_t> counts(256, 0);
  counts[5] = 3;
  counts[200] = 9;
  counts[7] = 3;
  EXPECT_EQ(rank_by_frequency(counts), (std::vector<std::uint32_t>{200, 5, 7}));
}

TEST(Sim, RoundTripRandom) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t h = 2 * (1 + rng() % 24);
    const std::size_t w = 2 * (1 + rng() % 24);
    const auto img = support::random_image(rng, h, w);
    const auto enc = sim_forward(img);
    ASSERT_EQ(sim_inverse(enc.side_info, enc.payload, h, w), img);
    BitStream joined = enc.side_info;
    joined.append(enc.payload);
    ASSERT_EQ(sim_read(joined, h, w), img);
    EXPECT_EQ(joined.remaining(), 0U);
  }
}

TEST(Sim, RoundTripNatural) {
  for (const auto& f : support::fixture_files("covers")) {
    const auto img = read_pgm_file(f);
    const auto enc = sim_forward(img);
    EXPECT_EQ(sim_inverse(enc.side_info, enc.payload, img.height(), img.width()), img) << f;
  }
}

TEST(Sim, ZeroGainProperties) {
  EXPECT_DOUBLE_EQ(sim_zero_gain(GrayImage(8, 8, 201)).after, 1.0);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto img = support::random_image(rng, 16, 16);
    const auto g = sim_zero_gain(img);
    EXPECT_GE(g.after, g.before);
    EXPECT_GE(g.after, 0.5);
  }
  const auto ramp = sim_zero_gain(support::ramp_image());
  EXPECT_DOUBLE_EQ(ramp.after, 0.5);
}

TEST(Sim, OverheadOnHalfSizeSecret) {
  std::mt19937_64 rng(6);
  const auto img = support::uniform_image(rng, 128, 256);
  const auto enc = sim_forward(img);
  EXPECT_LE(static_cast<double>(enc.side_info.size()) / static_cast<double>(enc.payload.size()),
            2057.0 / (8.0 * 128 * 256));
}

TEST(Sim, RejectsCorruptSideInfo) {
  auto expect_code = [](BitStream s, Errc code) {
    try {
      sim_read(s, 2, 2);
      ADD_FAILURE() << "parsed";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code) << errc_name(e.code());
    }
  };
  expect_code(BitStream::from_string("000000000"), Errc::ZeroValueCount);
  expect_code(BitStream::from_string("100000001"), Errc::ValueCountOutOfRange);
  expect_code(BitStream::from_string("000000010" "00000001" "00000001"), Errc::DuplicateValue);
  expect_code(BitStream::from_string("000000001" "00000001" "0000"), Errc::StreamExhausted);
  // One distinct value but a code other than rank 0.
  expect_code(BitStream::from_string("000000001" "00000001" "00000001" "00000000" "00000000" "00000000"),
              Errc::RankCountMismatch);
}
