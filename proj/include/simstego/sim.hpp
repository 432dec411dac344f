#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simstego/bitstream.hpp"
#include "simstego/image.hpp"

namespace simstego {

// All b-bit values grouped by popcount ascending, ascending within a group. b in [1, 16].
const std::vector<std::uint16_t>& popcount_codes(unsigned b);
// Position of each value inside popcount_codes(b).
const std::vector<std::uint16_t>& popcount_rank(unsigned b);

// Distinct values of `counts` (indexed by value) ordered by descending count, ties by
// ascending value.
std::vector<std::uint32_t> rank_by_frequency(const std::vector<std::uint64_t>& counts);

// Inverse of the rank substitution: codes were produced by mapping the value of rank i to
// popcount_codes(b)[i]. Returns rank per code and validates the ranking against `n_values`.
std::vector<std::uint32_t> ranks_from_codes(const std::vector<std::uint32_t>& codes, unsigned b,
                                            std::size_t n_values);

struct SimEncoded {
  BitStream side_info;
  BitStream payload;
};

constexpr std::size_t kSimMaxSideInfoBits = 9 + 256 * 8;

SimEncoded sim_forward(const GrayImage& secret);
// Same substitution over an arbitrary value sequence (used for the LL band).
SimEncoded sim_encode_values(const std::vector<std::uint8_t>& values);
std::vector<std::uint8_t> sim_read_values(BitStream& stream, std::size_t count);
GrayImage sim_inverse(const BitStream& side_info, const BitStream& payload, std::size_t height,
                      std::size_t width);
// Reads side information then codes from the stream cursor.
GrayImage sim_read(BitStream& stream, std::size_t height, std::size_t width);

struct ZeroGain {
  double before;
  double after;
};

ZeroGain sim_zero_gain(const GrayImage& img);

}  // namespace simstego
