#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "simstego/bitstream.hpp"
#include "simstego/image.hpp"
#include "simstego/iwt.hpp"

namespace simstego {

enum class SideInfoFormat : std::uint8_t { Narrow = 0, Wide = 1 };

// Header of one high-frequency band. Narrow format: <= 256 distinct values.
struct SubbandSideInfo {
  SideInfoFormat format = SideInfoFormat::Narrow;
  std::int32_t min_coeff = 0;
  unsigned code_width = 8;
  std::vector<std::uint32_t> value_list;  // shifted coefficients, most frequent first

  std::size_t bit_length() const noexcept;
  void write(BitStream& out) const;
  static SubbandSideInfo read(BitStream& in, BandId band);
};

constexpr unsigned kMinFieldBits = 11;
constexpr std::size_t kNarrowSideInfoMaxBits = 1 + kMinFieldBits + 2 + 9 + 256 * 10;

// Largest possible header for a band, from its coefficient range.
std::size_t subband_side_info_max_bits(BandId band) noexcept;
// Worst case over all four bands, LL included.
std::size_t iwsim_max_side_info_bits() noexcept;

struct BandBlock {
  BitStream side_info;
  BitStream codes;
};

struct IwsimEncoded {
  std::array<BandBlock, 4> blocks;  // LL, LH, HL, HH

  BitStream serialize() const;
  std::size_t side_info_bits() const noexcept;
  std::size_t code_bits() const noexcept;
};

IwsimEncoded iwsim_encode(const GrayImage& secret);
BitStream iwsim_forward(const GrayImage& secret);
// Parses from the stream cursor; leaves the cursor after the last band.
GrayImage iwsim_read(BitStream& stream, std::size_t height, std::size_t width);
GrayImage iwsim_inverse(const BitStream& stream, std::size_t height, std::size_t width);
std::size_t iwsim_overhead(const GrayImage& secret);

}  // namespace simstego
