#include "simstego/baselines.hpp"

#include <vector>

#include "simstego/error.hpp"
#include "simstego/prng.hpp"

namespace simstego {

namespace {

bool saturated(std::uint8_t v) { return v == 0 || v == 255; }

unsigned pair_bit(int x1, int x2) { return static_cast<unsigned>((x1 / 2 + x2) & 1); }

// +-1 step for a non-saturated pixel that must stay within [1,254].
int step_inside(int x, Xoshiro256& rng) {
  if (x <= 1) return x + 1;
  if (x >= 254) return x - 1;
  return rng.coin() ? x + 1 : x - 1;
}

std::vector<std::uint32_t> usable_order(const GrayImage& img, Xoshiro256& rng) {
  auto order = permutation(rng, img.size());
  std::vector<std::uint32_t> out;
  out.reserve(order.size());
  for (auto i : order) {
    if (!saturated(img[i])) out.push_back(i);
  }
  return out;
}

}  // namespace

GrayImage lsbr_embed(const GrayImage& cover, const BitStream& payload, std::uint64_t seed) {
  if (payload.size() > cover.size()) throw CapacityError(payload.size(), cover.size());
  Xoshiro256 rng(seed);
  const auto order = permutation(rng, cover.size());
  GrayImage out = cover;
  for (std::size_t k = 0; k < payload.size(); ++k) {
    auto& v = out[order[k]];
    v = static_cast<std::uint8_t>((v & 0xFEU) | (payload.bit(k) ? 1U : 0U));
  }
  return out;
}

BitStream lsbr_extract(const GrayImage& stego, std::size_t n_bits, std::uint64_t seed) {
  if (n_bits > stego.size()) throw CapacityError(n_bits, stego.size());
  Xoshiro256 rng(seed);
  const auto order = permutation(rng, stego.size());
  BitStream bits;
  for (std::size_t k = 0; k < n_bits; ++k) bits.push_bit(stego[order[k]] & 1U);
  return bits;
}

GrayImage lsbm_embed(const GrayImage& cover, const BitStream& payload, std::uint64_t seed) {
  if (payload.size() > cover.size()) throw CapacityError(payload.size(), cover.size());
  Xoshiro256 rng(seed);
  const auto order = permutation(rng, cover.size());
  GrayImage out = cover;
  for (std::size_t k = 0; k < payload.size(); ++k) {
    auto& v = out[order[k]];
    if ((v & 1U) == (payload.bit(k) ? 1U : 0U)) continue;
    if (v == 0) {
      v = 1;
    } else if (v == 255) {
      v = 254;
    } else {
      v = static_cast<std::uint8_t>(rng.coin() ? v + 1 : v - 1);
    }
  }
  return out;
}

std::size_t lsbmr_capacity_bits(const GrayImage& cover) noexcept {
  std::size_t usable = 0;
  for (auto v : cover.pixels()) usable += saturated(v) ? 0 : 1;
  return usable - usable % 2;
}

GrayImage lsbmr_embed(const GrayImage& cover, const BitStream& payload, std::uint64_t seed) {
  if (payload.size() % 2 != 0) {
    throw Error(Errc::InvalidPayload, "pixel-pair embedding needs an even number of bits");
  }
  Xoshiro256 rng(seed);
  const auto order = usable_order(cover, rng);
  const std::size_t available = order.size() - order.size() % 2;
  if (payload.size() > available) throw CapacityError(payload.size(), available);
  GrayImage out = cover;
  for (std::size_t k = 0; k < payload.size(); k += 2) {
    int x1 = out[order[k]];
    int x2 = out[order[k + 1]];
    const unsigned m1 = payload.bit(k) ? 1U : 0U;
    const unsigned m2 = payload.bit(k + 1) ? 1U : 0U;
    if (static_cast<unsigned>(x1 & 1) == m1) {
      if (pair_bit(x1, x2) != m2) x2 = step_inside(x2, rng);
    } else {
      int moved = pair_bit(x1 - 1, x2) == m2 ? x1 - 1 : x1 + 1;
      if (moved < 1 || moved > 254) {
        // The matching direction would saturate: take the other one and fix m2 with x2.
        moved = 2 * x1 - moved;
        x2 = step_inside(x2, rng);
      }
      x1 = moved;
    }
    out[order[k]] = static_cast<std::uint8_t>(x1);
    out[order[k + 1]] = static_cast<std::uint8_t>(x2);
  }
  return out;
}

BitStream lsbmr_extract(const GrayImage& stego, std::size_t n_bits, std::uint64_t seed) {
  if (n_bits % 2 != 0) {
    throw Error(Errc::InvalidPayload, "pixel-pair extraction needs an even number of bits");
  }
  Xoshiro256 rng(seed);
  const auto order = usable_order(stego, rng);
  const std::size_t available = order.size() - order.size() % 2;
  if (n_bits > available) throw CapacityError(n_bits, available);
  BitStream bits;
  for (std::size_t k = 0; k < n_bits; k += 2) {
    const int x1 = stego[order[k]];
    const int x2 = stego[order[k + 1]];
    bits.push_bit(x1 & 1);
    bits.push_bit(pair_bit(x1, x2) != 0);
  }
  return bits;
}

}  // namespace simstego
