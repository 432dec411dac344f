#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "simstego/image.hpp"

namespace simstego::support {

inline std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(SIMSTEGO_FIXTURES) / rel;
}

inline std::vector<std::filesystem::path> fixture_files(const std::string& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(fixture(dir))) {
    if (e.path().extension() == ".pgm") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline GrayImage uniform_image(std::mt19937_64& rng, std::size_t h, std::size_t w) {
  std::uniform_int_distribution<int> d(0, 255);
  std::vector<std::uint8_t> px(h * w);
  for (auto& v : px) v = static_cast<std::uint8_t>(d(rng));
  return GrayImage(h, w, std::move(px));
}

// Low-frequency content plus mild noise, so value frequencies are far from uniform.
inline GrayImage smooth_image(std::mt19937_64& rng, std::size_t h, std::size_t w) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 2.0);
  const double fx = 1.0 + 4.0 * u(rng);
  const double fy = 1.0 + 4.0 * u(rng);
  const double phase = 6.28 * u(rng);
  const double base = 40.0 + 170.0 * u(rng);
  const double amp = 10.0 + 30.0 * u(rng);
  std::vector<std::uint8_t> px(h * w);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const double v = base + amp * std::sin(fx * static_cast<double>(r) / static_cast<double>(h) * 3.14 + phase) *
                                  std::cos(fy * static_cast<double>(c) / static_cast<double>(w) * 3.14) +
                       noise(rng);
      px[r * w + c] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
  return GrayImage(h, w, std::move(px));
}

inline GrayImage random_image(std::mt19937_64& rng, std::size_t h, std::size_t w) {
  return (rng() & 1U) ? uniform_image(rng, h, w) : smooth_image(rng, h, w);
}

inline GrayImage ramp_image() {
  std::vector<std::uint8_t> px(256);
  for (int v = 0; v < 256; ++v) px[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
  return GrayImage(16, 16, std::move(px));
}

// Mean of each f x f block, floor.
inline GrayImage shrink(const GrayImage& img, std::size_t f) {
  const std::size_t h = img.height() / f / 2 * 2;
  const std::size_t w = img.width() / f / 2 * 2;
  std::vector<std::uint8_t> px(h * w);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      unsigned sum = 0;
      for (std::size_t i = 0; i < f; ++i) {
        for (std::size_t j = 0; j < f; ++j) sum += img.at(r * f + i, c * f + j);
      }
      px[r * w + c] = static_cast<std::uint8_t>(sum / (f * f));
    }
  }
  return GrayImage(h, w, std::move(px));
}

}  // namespace simstego::support
