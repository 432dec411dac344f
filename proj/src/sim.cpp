#include "simstego/sim.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "simstego/error.hpp"

namespace simstego {

namespace {

struct CodeTables {
  std::array<std::vector<std::uint16_t>, 17> codes;
  std::array<std::vector<std::uint16_t>, 17> ranks;
  CodeTables() {
    for (unsigned b = 1; b <= 16; ++b) {
      auto& c = codes[b];
      c.resize(std::size_t{1} << b);
      std::iota(c.begin(), c.end(), std::uint16_t{0});
      std::stable_sort(c.begin(), c.end(), [](std::uint16_t x, std::uint16_t y) {
        return std::popcount(x) < std::popcount(y);
      });
      ranks[b].resize(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) ranks[b][c[i]] = static_cast<std::uint16_t>(i);
    }
  }
};

const CodeTables& tables() {
  static const CodeTables t;
  return t;
}

void check_width(unsigned b) {
  if (b < 1 || b > 16) throw Error(Errc::InvalidArgument, "code width outside [1,16]");
}

}  // namespace

const std::vector<std::uint16_t>& popcount_codes(unsigned b) {
  check_width(b);
  return tables().codes[b];
}

const std::vector<std::uint16_t>& popcount_rank(unsigned b) {
  check_width(b);
  return tables().ranks[b];
}

std::vector<std::uint32_t> rank_by_frequency(const std::vector<std::uint64_t>& counts) {
  std::vector<std::uint32_t> present;
  for (std::uint32_t v = 0; v < counts.size(); ++v) {
    if (counts[v] > 0) present.push_back(v);
  }
  std::stable_sort(present.begin(), present.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return counts[a] > counts[b]; });
  return present;
}

std::vector<std::uint32_t> ranks_from_codes(const std::vector<std::uint32_t>& codes, unsigned b,
                                            std::size_t n_values) {
  const auto& order = popcount_codes(b);
  const auto& rank = popcount_rank(b);
  std::vector<std::uint64_t> counts(order.size(), 0);
  for (auto c : codes) ++counts[c];
  // Tie-break by codebook position: re-index the counts by rank and reuse the encoder ordering.
  std::vector<std::uint64_t> by_rank(order.size(), 0);
  for (std::size_t c = 0; c < counts.size(); ++c) by_rank[rank[c]] = counts[c];
  const auto ranked = rank_by_frequency(by_rank);
  if (ranked.size() != n_values) {
    throw Error(Errc::RankCountMismatch, std::to_string(ranked.size()) +
                                             " distinct codes but side information lists " +
                                             std::to_string(n_values) + " values");
  }
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (ranked[i] != i) {
      throw Error(Errc::InconsistentRanking, "code frequencies do not follow codebook order");
    }
  }
  std::vector<std::uint32_t> out(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) out[i] = rank[codes[i]];
  return out;
}

SimEncoded sim_encode_values(const std::vector<std::uint8_t>& values) {
  std::vector<std::uint64_t> counts(256, 0);
  for (auto v : values) ++counts[v];
  const auto ranked = rank_by_frequency(counts);
  const auto& codes = popcount_codes(8);
  std::array<std::uint8_t, 256> substitute{};
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    substitute[ranked[i]] = static_cast<std::uint8_t>(codes[i]);
  }
  SimEncoded out;
  out.side_info.write_field(ranked.size(), 9);
  for (auto v : ranked) out.side_info.write_field(v, 8);
  for (auto v : values) out.payload.write_field(substitute[v], 8);
  return out;
}

SimEncoded sim_forward(const GrayImage& secret) { return sim_encode_values(secret.pixels()); }

std::vector<std::uint8_t> sim_read_values(BitStream& stream, std::size_t count) {
  const std::size_t n_values = stream.read_field(9);
  if (n_values == 0) throw Error(Errc::ZeroValueCount, "SIM side information lists no values");
  if (n_values > 256) {
    throw Error(Errc::ValueCountOutOfRange,
                "SIM side information lists " + std::to_string(n_values) + " values");
  }
  std::vector<std::uint8_t> original(n_values);
  std::array<bool, 256> seen{};
  for (auto& v : original) {
    v = static_cast<std::uint8_t>(stream.read_field(8));
    if (seen[v]) throw Error(Errc::DuplicateValue, "SIM side information repeats a value");
    seen[v] = true;
  }
  std::vector<std::uint32_t> codes(count);
  for (auto& c : codes) c = stream.read_field(8);
  const auto ranks = ranks_from_codes(codes, 8, n_values);
  std::vector<std::uint8_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = original[ranks[i]];
  return out;
}

GrayImage sim_read(BitStream& stream, std::size_t height, std::size_t width) {
  check_dimensions(height, width);
  return GrayImage(height, width, sim_read_values(stream, height * width));
}

GrayImage sim_inverse(const BitStream& side_info, const BitStream& payload, std::size_t height,
                      std::size_t width) {
  check_dimensions(height, width);
  if (payload.size() != 8 * height * width) {
    throw Error(Errc::LengthMismatch, "SIM payload has " + std::to_string(payload.size()) +
                                          " bits, expected " + std::to_string(8 * height * width));
  }
  BitStream joined = side_info;
  joined.append(payload);
  joined.seek(0);
  auto img = sim_read(joined, height, width);
  if (joined.remaining() != 0) {
    throw Error(Errc::LengthMismatch, "SIM side information length disagrees with its count");
  }
  return img;
}

ZeroGain sim_zero_gain(const GrayImage& img) {
  std::uint64_t ones_before = 0;
  for (auto v : img.pixels()) ones_before += static_cast<std::uint64_t>(std::popcount(v));
  const double bits = 8.0 * static_cast<double>(img.size());
  const auto encoded = sim_forward(img);
  return {1.0 - static_cast<double>(ones_before) / bits, encoded.payload.zero_ratio()};
}

}  // namespace simstego
