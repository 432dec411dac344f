#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

#include "simstego/image.hpp"
#include "simstego/methods.hpp"

namespace simstego {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct EmbedStats {
  std::size_t payload_bits = 0;
  std::size_t modified_pixels = 0;
  std::size_t total_pixels = 0;
  double ee = 0.0;
  double psnr_db = 0.0;
  double capacity_fraction = 0.0;
};

std::size_t modified_pixels(const GrayImage& cover, const GrayImage& stego);
// Embedded bits per modified pixel; +inf when nothing changed.
double embedding_efficiency(const GrayImage& cover, const GrayImage& stego, std::size_t payload_bits);
// Probability that a pixel changes when payload bits with zero ratio r0 meet cover LSBs with
// zero ratio r0_cover.
double expected_change_prob(double r0, double r0_cover);
double mse(const GrayImage& a, const GrayImage& b);
double psnr(const GrayImage& a, const GrayImage& b);

// Payload bits (before side information and header) a method can carry on this cover, taking the
// worst-case side information for the transform pipelines.
std::size_t capacity_bits(Method method, const GrayImage& cover);
double capacity(Method method, const GrayImage& cover);

EmbedStats embed_stats(Method method, const GrayImage& cover, const GrayImage& stego,
                       std::size_t payload_bits);

}  // namespace simstego
