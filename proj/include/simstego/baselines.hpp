#pragma once

#include <cstddef>
#include <cstdint>

#include "simstego/bitstream.hpp"
#include "simstego/image.hpp"

namespace simstego {

GrayImage lsbr_embed(const GrayImage& cover, const BitStream& payload, std::uint64_t seed);
BitStream lsbr_extract(const GrayImage& stego, std::size_t n_bits, std::uint64_t seed);

// Mismatched pixels move by +-1 using the same generator after the traversal shuffle.
GrayImage lsbm_embed(const GrayImage& cover, const BitStream& payload, std::uint64_t seed);
inline BitStream lsbm_extract(const GrayImage& stego, std::size_t n_bits, std::uint64_t seed) {
  return lsbr_extract(stego, n_bits, seed);
}

// Pairs are consecutive non-saturated pixels along the traversal. Stego values of used pixels
// stay inside [1,254], so the receiver sees the same pairing.
GrayImage lsbmr_embed(const GrayImage& cover, const BitStream& payload, std::uint64_t seed);
BitStream lsbmr_extract(const GrayImage& stego, std::size_t n_bits, std::uint64_t seed);
std::size_t lsbmr_capacity_bits(const GrayImage& cover) noexcept;

}  // namespace simstego
