#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simstego/image.hpp"

namespace simstego {

struct Band {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int32_t> values;

  std::int32_t at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  friend bool operator==(const Band&, const Band&) = default;
};

enum class BandId : std::uint8_t { LL = 0, LH = 1, HL = 2, HH = 3 };

// Level-1 integer Haar bands. LH holds (row-high, column-low), HL (row-low, column-high).
struct SubBands {
  Band ll, lh, hl, hh;
  std::size_t source_height = 0;
  std::size_t source_width = 0;

  const Band& band(BandId id) const;
  friend bool operator==(const SubBands&, const SubBands&) = default;
};

struct BandRange {
  std::int32_t lo;
  std::int32_t hi;
};

BandRange band_range(BandId id) noexcept;

SubBands haar_forward(const GrayImage& img);
GrayImage haar_inverse(const SubBands& bands);

}  // namespace simstego
