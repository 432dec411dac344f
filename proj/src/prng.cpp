#include "simstego/prng.hpp"

#include <bit>
#include <numeric>

#include "simstego/error.hpp"

namespace simstego {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t key) {
  SplitMix64 sm(key);
  for (auto& w : s_) w = sm.next();
}

Xoshiro256 Xoshiro256::from_state(const std::array<std::uint64_t, 4>& state) {
  Xoshiro256 g(0);
  g.s_ = state;
  return g;
}

std::uint64_t Xoshiro256::next() noexcept {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) noexcept {
  u128 m = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::vector<std::uint32_t> permutation(Xoshiro256& rng, std::size_t n) {
  std::vector<std::uint32_t> a(n);
  std::iota(a.begin(), a.end(), 0U);
  for (std::size_t i = n; i-- > 1;) {
    std::swap(a[i], a[rng.below(i + 1)]);
  }
  return a;
}

std::vector<std::uint32_t> pixel_order(std::uint64_t seed, std::size_t n_pixels) {
  if (n_pixels < 2) throw Error(Errc::InvalidDimensions, "pixel order needs at least 2 pixels");
  Xoshiro256 rng(seed);
  return permutation(rng, n_pixels - 1);
}

std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c) noexcept {
  SplitMix64 sm(seed);
  std::uint64_t k = sm.next();
  for (auto part : {a, b, c}) {
    SplitMix64 mix(k ^ part);
    k = mix.next();
  }
  return k;
}

}  // namespace simstego
