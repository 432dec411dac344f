#include "simstego/iwt.hpp"

#include "simstego/error.hpp"

namespace simstego {

namespace {

// C++20 guarantees arithmetic right shift, i.e. floor division by 2.
inline std::int32_t floor_half(std::int32_t v) { return v >> 1; }

Band make_band(std::size_t rows, std::size_t cols) {
  return Band{rows, cols, std::vector<std::int32_t>(rows * cols, 0)};
}

}  // namespace

const Band& SubBands::band(BandId id) const {
  switch (id) {
    case BandId::LL: return ll;
    case BandId::LH: return lh;
    case BandId::HL: return hl;
    case BandId::HH: return hh;
  }
  return ll;
}

BandRange band_range(BandId id) noexcept {
  switch (id) {
    case BandId::LL: return {0, 255};
    case BandId::LH:
    case BandId::HL: return {-255, 255};
    case BandId::HH: return {-510, 510};
  }
  return {0, 0};
}

SubBands haar_forward(const GrayImage& img) {
  if (img.height() % 2 != 0 || img.width() % 2 != 0) {
    throw Error(Errc::OddDimension, "integer Haar needs even dimensions");
  }
  const std::size_t h = img.height() / 2;
  const std::size_t w = img.width() / 2;
  // Row pass: per row, low and high halves.
  std::vector<std::int32_t> row_low(img.height() * w), row_high(img.height() * w);
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const std::int32_t a = img.at(r, 2 * c);
      const std::int32_t b = img.at(r, 2 * c + 1);
      row_low[r * w + c] = floor_half(a + b);
      row_high[r * w + c] = a - b;
    }
  }
  SubBands out{make_band(h, w), make_band(h, w), make_band(h, w), make_band(h, w), img.height(),
               img.width()};
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t top = 2 * r * w + c;
      const std::size_t bottom = top + w;
      out.ll.values[r * w + c] = floor_half(row_low[top] + row_low[bottom]);
      out.hl.values[r * w + c] = row_low[top] - row_low[bottom];
      out.lh.values[r * w + c] = floor_half(row_high[top] + row_high[bottom]);
      out.hh.values[r * w + c] = row_high[top] - row_high[bottom];
    }
  }
  return out;
}

GrayImage haar_inverse(const SubBands& bands) {
  const std::size_t h = bands.ll.rows;
  const std::size_t w = bands.ll.cols;
  for (const Band* b : {&bands.lh, &bands.hl, &bands.hh}) {
    if (b->rows != h || b->cols != w || b->values.size() != h * w) {
      throw Error(Errc::CorruptBands, "sub-band shapes disagree");
    }
  }
  if (bands.ll.values.size() != h * w) throw Error(Errc::CorruptBands, "LL band shape invalid");
  check_dimensions(2 * h, 2 * w);
  std::vector<std::uint8_t> px(4 * h * w);
  const std::size_t width = 2 * w;
  auto put = [&](std::size_t r, std::size_t c, std::int32_t v) {
    if (v < 0 || v > 255) {
      throw Error(Errc::CorruptBands, "reconstructed pixel " + std::to_string(v) + " out of range");
    }
    px[r * width + c] = static_cast<std::uint8_t>(v);
  };
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t i = r * w + c;
      // Columns first: recover the row-low and row-high pairs.
      const std::int32_t low_top = bands.ll.values[i] + floor_half(bands.hl.values[i] + 1);
      const std::int32_t low_bottom = low_top - bands.hl.values[i];
      const std::int32_t high_top = bands.lh.values[i] + floor_half(bands.hh.values[i] + 1);
      const std::int32_t high_bottom = high_top - bands.hh.values[i];
      const std::int32_t a0 = low_top + floor_half(high_top + 1);
      const std::int32_t a1 = low_bottom + floor_half(high_bottom + 1);
      put(2 * r, 2 * c, a0);
      put(2 * r, 2 * c + 1, a0 - high_top);
      put(2 * r + 1, 2 * c, a1);
      put(2 * r + 1, 2 * c + 1, a1 - high_bottom);
    }
  }
  return GrayImage(2 * h, 2 * w, std::move(px));
}

}  // namespace simstego
