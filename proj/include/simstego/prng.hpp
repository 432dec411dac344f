#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace simstego {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

// xoshiro256**, state expanded from a 64-bit key with SplitMix64.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t key);
  static Xoshiro256 from_state(const std::array<std::uint64_t, 4>& state);
  std::uint64_t next() noexcept;
  // Unbiased integer in [0, bound), Lemire's multiply-and-reject method.
  std::uint64_t below(std::uint64_t bound) noexcept;
  bool coin() noexcept { return (next() >> 63) != 0; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

// Fisher-Yates from the top index down: for i = n-1..1 swap(a[i], a[below(i+1)]).
std::vector<std::uint32_t> permutation(Xoshiro256& rng, std::size_t n);
// Traversal of a cover with n_pixels pixels; the last raster pixel is excluded.
std::vector<std::uint32_t> pixel_order(std::uint64_t seed, std::size_t n_pixels);

// Independent sub-key for a labelled task, used to seed bench tuples.
std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                         std::uint64_t c = 0) noexcept;

}  // namespace simstego
