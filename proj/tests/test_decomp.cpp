#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "simstego/decomp.hpp"
#include "simstego/error.hpp"
#include "test_support.hpp"

using namespace simstego;

namespace {

std::vector<Scheme> all_schemes() {
  return {Scheme::binary(), Scheme::extended_binary(3), Scheme::fibonacci(), Scheme::lucas()};
}

// Among every subset of the sequence summing to v, the one whose membership vector is
// largest when read from the biggest element down.
CodeBits brute_force_code(const Scheme& s, unsigned v) {
  const auto& seq = s.sequence();
  const unsigned n = s.length();
  std::vector<unsigned> by_value(n);
  std::iota(by_value.begin(), by_value.end(), 0U);
  std::stable_sort(by_value.begin(), by_value.end(),
                   [&](unsigned a, unsigned b) { return seq[a] > seq[b]; });
  CodeBits best = 0;
  std::uint64_t best_key = 0;
  bool found = false;
  for (CodeBits mask = 0; mask < (CodeBits{1} << n); ++mask) {
    unsigned sum = 0;
    for (unsigned i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) sum += seq[i];
    }
    if (sum != v) continue;
    std::uint64_t key = 0;
    for (unsigned idx : by_value) key = (key << 1) | ((mask >> idx) & 1U);
    if (!found || key > best_key) {
      best = mask;
      best_key = key;
      found = true;
    }
  }
  EXPECT_TRUE(found) << s.name() << " cannot represent " << v;
  return best;
}

}  // namespace

TEST(Scheme, Sequences) {
  EXPECT_EQ(Scheme::binary().sequence(), (std::vector<unsigned>{1, 2, 4, 8, 16, 32, 64, 128}));
  EXPECT_EQ(Scheme::extended_binary(3).sequence(),
            (std::vector<unsigned>{1, 2, 3, 4, 8, 16, 32, 64, 128}));
  EXPECT_EQ(Scheme::fibonacci().sequence(),
            (std::vector<unsigned>{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233}));
  EXPECT_EQ(Scheme::lucas().sequence(),
            (std::vector<unsigned>{2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199}));
  EXPECT_EQ(Scheme::extended_binary(3).name(), "extended-binary-3");
}

TEST(Scheme, GreedyMatchesExhaustiveSearch) {
  for (const auto& s : all_schemes()) {
    for (unsigned v = 0; v < 256; ++v) {
      ASSERT_EQ(s.decompose(static_cast<std::uint8_t>(v)), brute_force_code(s, v))
          << s.name() << " v=" << v;
    }
  }
}

TEST(Scheme, WorkedCodes) {
  const auto fib = Scheme::fibonacci();
  EXPECT_EQ(fib.code_string(fib.decompose(5)), "000000001000");
  EXPECT_EQ(fib.code_string(fib.decompose(7)), "000000001010");
  const auto eb = Scheme::extended_binary(3);
  EXPECT_EQ(eb.code_string(eb.decompose(7)), "000001100");
  const auto bin = Scheme::binary();
  EXPECT_EQ(bin.code_string(bin.decompose(77)), "01001101");
}

TEST(Scheme, ComposeInvertsDecompose) {
  for (const auto& s : all_schemes()) {
    for (unsigned v = 0; v < 256; ++v) {
      const auto c = s.decompose(static_cast<std::uint8_t>(v));
      EXPECT_TRUE(s.is_canonical(c));
      EXPECT_EQ(s.compose(c), v);
    }
  }
}

TEST(Scheme, ComposeRejectsNonCanonical) {
  const auto fib = Scheme::fibonacci();
  // 1 + 2 written with both low positions set; canonical form is the single 3.
  try {
    fib.compose(0b011);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonCanonicalCode);
  }
  EXPECT_FALSE(Scheme::extended_binary(3).is_canonical(0b00011));
}

TEST(Scheme, CodesAreUnique) {
  for (const auto& s : all_schemes()) {
    std::set<CodeBits> seen;
    for (unsigned v = 0; v < 256; ++v) seen.insert(s.decompose(static_cast<std::uint8_t>(v)));
    EXPECT_EQ(seen.size(), 256U) << s.name();
  }
}

TEST(Scheme, FibonacciHasNoAdjacentOnes) {
  const auto fib = Scheme::fibonacci();
  for (unsigned v = 0; v < 256; ++v) {
    const auto c = fib.decompose(static_cast<std::uint8_t>(v));
    EXPECT_EQ(c & (c >> 1), 0U) << v;
  }
}

TEST(Scheme, ExtendedBinaryLsb) {
  const auto eb = Scheme::extended_binary(3);
  unsigned zeros = 0;
  for (unsigned v = 0; v < 256; ++v) {
    EXPECT_EQ(eb.lsb(static_cast<std::uint8_t>(v)), v % 4 == 1 ? 1U : 0U) << v;
    if (eb.lsb(static_cast<std::uint8_t>(v)) == 0) ++zeros;
  }
  EXPECT_EQ(zeros, 192U);
  const auto bin = Scheme::binary();
  for (unsigned v = 0; v < 256; ++v) EXPECT_EQ(bin.lsb(static_cast<std::uint8_t>(v)), v % 2);
}

TEST(Scheme, RejectsBadExtraElement) {
  EXPECT_THROW(Scheme::extended_binary(4), Error);
  EXPECT_THROW(Scheme::extended_binary(1), Error);
  EXPECT_THROW(Scheme::extended_binary(257), Error);
}

TEST(ZeroLsb, RampAndConstant) {
  const auto ramp = support::ramp_image();
  EXPECT_DOUBLE_EQ(zero_lsb_ratio(Scheme::binary(), ramp), 0.5);
  EXPECT_DOUBLE_EQ(zero_lsb_ratio(Scheme::extended_binary(3), ramp), 0.75);
  EXPECT_DOUBLE_EQ(zero_lsb_ratio(Scheme::extended_binary(3), GrayImage(4, 4, 3)), 1.0);
  EXPECT_DOUBLE_EQ(zero_lsb_ratio(Scheme::binary(), GrayImage(4, 4, 3)), 0.0);
}

TEST(ZeroLsb, GainEqualsShareOfThreeModFour) {
  std::mt19937_64 rng(8);
  const auto eb = Scheme::extended_binary(3);
  const auto bin = Scheme::binary();
  for (int t = 0; t < 50; ++t) {
    const auto img = support::random_image(rng, 32, 48);
    const auto h = histogram(img);
    std::uint64_t share = 0;
    for (unsigned i = 0; i < 64; ++i) share += h[3 + 4 * i];
    const double n = static_cast<double>(img.size());
    EXPECT_NEAR(zero_lsb_ratio(eb, img) - zero_lsb_ratio(bin, img), static_cast<double>(share) / n, 1e-12);
  }
}

TEST(ZeroLsb, ExtendedVariantsBeatBinaryOnRamp) {
  const auto ramp = support::ramp_image();
  const double base = zero_lsb_ratio(Scheme::binary(), ramp);
  for (unsigned x : {5U, 11U, 23U, 47U, 97U}) {
    const auto s = Scheme::extended_binary(x);
    EXPECT_EQ(s.length(), 9U);
    EXPECT_GE(zero_lsb_ratio(s, ramp), base) << x;
  }
}

TEST(Partition, ExtendedBinarySets) {
  const auto sets = partition_sets(Scheme::extended_binary(3));
  EXPECT_TRUE(sets.get(0, 1).empty());
  ASSERT_EQ(sets.get(1, 0).size(), 64U);
  for (auto v : sets.get(1, 0)) EXPECT_EQ(v % 4, 3);
  const auto bin = partition_sets(Scheme::binary());
  EXPECT_TRUE(bin.get(0, 1).empty());
  EXPECT_TRUE(bin.get(1, 0).empty());
}

TEST(Partition, CoversAllValues) {
  for (const auto& s : all_schemes()) {
    const auto sets = partition_sets(s);
    std::vector<int> seen(256, 0);
    for (unsigned i = 0; i < 2; ++i) {
      for (unsigned j = 0; j < 2; ++j) {
        for (auto v : sets.get(i, j)) {
          ++seen[v];
          EXPECT_EQ(v % 2, i);
          EXPECT_EQ(s.lsb(v), j);
        }
      }
    }
    for (int c : seen) EXPECT_EQ(c, 1);
  }
}

TEST(Scheme, ReachableLowPatterns) {
  auto reachable = [](const Scheme& s) {
    std::set<unsigned> out;
    for (unsigned v = 0; v < 256; ++v) out.insert(s.low3(static_cast<std::uint8_t>(v)));
    return out;
  };
  const std::set<unsigned> fib_allowed{0b000, 0b001, 0b010, 0b100, 0b101};
  const std::set<unsigned> four{0b000, 0b001, 0b010, 0b100};
  for (auto p : reachable(Scheme::fibonacci())) EXPECT_TRUE(fib_allowed.count(p)) << p;
  for (auto p : reachable(Scheme::extended_binary(3))) EXPECT_TRUE(four.count(p)) << p;
  for (auto p : reachable(Scheme::lucas())) EXPECT_TRUE(four.count(p)) << p;
}
