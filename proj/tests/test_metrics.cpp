#include <gtest/gtest.h>

#include <random>

#include "simstego/metrics.hpp"
#include "test_support.hpp"

using namespace simstego;

TEST(Metrics, ExpectedChangeProbability) {
  EXPECT_NEAR(expected_change_prob(0.80, 0.77), 0.338, 1e-9);
  EXPECT_DOUBLE_EQ(expected_change_prob(0.5, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(expected_change_prob(1.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(expected_change_prob(0.0, 1.0), 1.0);
}

TEST(Metrics, PsnrHalfPixelsPlusOne) {
  GrayImage a(16, 16, 100);
  GrayImage b = a;
  for (std::size_t i = 0; i < b.size(); i += 2) b[i] = 101;
  EXPECT_DOUBLE_EQ(mse(a, b), 0.5);
  EXPECT_NEAR(psnr(a, b), 51.1411, 1e-4);
  EXPECT_DOUBLE_EQ(psnr(a, b), psnr(b, a));
  EXPECT_DOUBLE_EQ(psnr(complement(a), complement(b)), psnr(a, b));
}

TEST(Metrics, Sentinels) {
  const GrayImage a(4, 4, 9);
  EXPECT_EQ(psnr(a, a), kInfinity);
  EXPECT_EQ(embedding_efficiency(a, a, 10), kInfinity);
  EXPECT_EQ(modified_pixels(a, a), 0U);
}

TEST(Metrics, Efficiency) {
  GrayImage a(4, 4, 9);
  GrayImage b = a;
  b[0] = 8;
  b[5] = 10;
  EXPECT_EQ(modified_pixels(a, b), 2U);
  EXPECT_DOUBLE_EQ(embedding_efficiency(a, b, 6), 3.0);
}

TEST(Metrics, PsnrProperties) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 20; ++t) {
    const auto a = support::uniform_image(rng, 16, 16);
    const auto b = support::uniform_image(rng, 16, 16);
    EXPECT_DOUBLE_EQ(psnr(a, b), psnr(b, a));
    EXPECT_NEAR(psnr(complement(a), complement(b)), psnr(a, b), 1e-12);
  }
}

TEST(Metrics, CapacityBits) {
  const GrayImage cover(512, 512, 100);
  const std::size_t n = cover.size();
  EXPECT_EQ(capacity_bits(Method::Lsbr, cover), n);
  EXPECT_EQ(capacity_bits(Method::Lsbm, cover), n);
  EXPECT_EQ(capacity_bits(Method::Lsbmr, cover), n);
  EXPECT_EQ(capacity_bits(Method::EbSim, cover), n - 1 - 32 - 2057);
  EXPECT_EQ(capacity_bits(Method::EbIwsim, cover), n - 1 - 32 - 21534);
  EXPECT_GE(static_cast<double>(capacity_bits(Method::EbSim, cover)) / static_cast<double>(n), 0.99);
  EXPECT_EQ(capacity_bits(Method::Lsbmr, GrayImage(4, 4, 0)), 0U);
}
