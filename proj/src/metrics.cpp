#include "simstego/metrics.hpp"

#include <cmath>

#include "simstego/baselines.hpp"
#include "simstego/error.hpp"
#include "simstego/iwsim.hpp"
#include "simstego/sim.hpp"
#include "simstego/stego.hpp"

namespace simstego {

namespace {

void check_same_shape(const GrayImage& a, const GrayImage& b) {
  if (a.height() != b.height() || a.width() != b.width()) {
    throw Error(Errc::LengthMismatch, "images differ in size");
  }
}

}  // namespace

std::size_t modified_pixels(const GrayImage& cover, const GrayImage& stego) {
  check_same_shape(cover, stego);
  std::size_t n = 0;
  for (std::size_t i = 0; i < cover.size(); ++i) n += cover[i] != stego[i] ? 1 : 0;
  return n;
}

double embedding_efficiency(const GrayImage& cover, const GrayImage& stego, std::size_t payload_bits) {
  if (payload_bits == 0) throw Error(Errc::InvalidArgument, "efficiency needs a nonempty payload");
  const auto changed = modified_pixels(cover, stego);
  if (changed == 0) return kInfinity;
  return static_cast<double>(payload_bits) / static_cast<double>(changed);
}

double expected_change_prob(double r0, double r0_cover) {
  return 1.0 - (r0 * r0_cover + (1.0 - r0) * (1.0 - r0_cover));
}

double mse(const GrayImage& a, const GrayImage& b) {
  check_same_shape(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

double psnr(const GrayImage& a, const GrayImage& b) {
  const double e = mse(a, b);
  if (e == 0.0) return kInfinity;
  return 10.0 * std::log10(255.0 * 255.0 / e);
}

std::size_t capacity_bits(Method method, const GrayImage& cover) {
  const std::size_t n = cover.size();
  switch (method) {
    case Method::Lsbr:
    case Method::Lsbm: return n;
    case Method::Lsbmr: return lsbmr_capacity_bits(cover);
    case Method::EbSim: {
      const std::size_t overhead = 1 + kHeaderBits + kSimMaxSideInfoBits;
      return n > overhead ? n - overhead : 0;
    }
    case Method::EbIwsim:
    case Method::FibIwsim:
    case Method::LIwsim: {
      const std::size_t overhead = 1 + kHeaderBits + iwsim_max_side_info_bits();
      return n > overhead ? n - overhead : 0;
    }
  }
  return 0;
}

double capacity(Method method, const GrayImage& cover) {
  return static_cast<double>(capacity_bits(method, cover)) / static_cast<double>(cover.size());
}

EmbedStats embed_stats(Method method, const GrayImage& cover, const GrayImage& stego,
                       std::size_t payload_bits) {
  EmbedStats s;
  s.payload_bits = payload_bits;
  s.modified_pixels = modified_pixels(cover, stego);
  s.total_pixels = cover.size();
  s.ee = embedding_efficiency(cover, stego, payload_bits);
  s.psnr_db = psnr(cover, stego);
  s.capacity_fraction = capacity(method, cover);
  return s;
}

}  // namespace simstego
