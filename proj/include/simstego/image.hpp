#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace simstego {

// 8-bit grayscale raster, row-major. Both dimensions are even and at least 2.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::size_t height, std::size_t width, std::uint8_t fill = 0);
  GrayImage(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels);

  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }
  std::uint8_t& at(std::size_t row, std::size_t col) { return pixels_[row * width_ + col]; }
  std::uint8_t operator[](std::size_t i) const { return pixels_[i]; }
  std::uint8_t& operator[](std::size_t i) { return pixels_[i]; }

  const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }
  std::vector<std::uint8_t>& pixels() noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<std::uint8_t> pixels_;
};

using Histogram = std::array<std::uint64_t, 256>;

// Throws Error(InvalidDimensions / OddDimension) for unusable sizes.
void check_dimensions(std::size_t height, std::size_t width);

GrayImage load_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> save_pgm(const GrayImage& img);
GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& img);

GrayImage complement(const GrayImage& img);
Histogram histogram(const GrayImage& img);

// Rows [row0, row0 + rows) of the image; both the offset and count must keep the result valid.
GrayImage crop_rows(const GrayImage& img, std::size_t row0, std::size_t rows);
GrayImage crop(const GrayImage& img, std::size_t row0, std::size_t col0, std::size_t rows,
               std::size_t cols);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace simstego
