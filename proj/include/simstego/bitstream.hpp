#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simstego {

// Bit sequence with an exact length and a read cursor. Fields are MSB first.
class BitStream {
 public:
  BitStream() = default;
  static BitStream from_string(std::string_view bits);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t cursor() const noexcept { return cursor_; }
  std::size_t remaining() const noexcept { return size_ - cursor_; }
  void seek(std::size_t pos);

  bool bit(std::size_t i) const { return (words_[i >> 6] >> (63 - (i & 63))) & 1U; }
  void set_bit(std::size_t i, bool b);

  void push_bit(bool b);
  // Appends `width` bits of `value`; width in [1, 32] and value < 2^width.
  void write_field(std::uint64_t value, unsigned width);
  void append(const BitStream& other);

  bool read_bit();
  std::uint32_t read_field(unsigned width);

  std::size_t count_zeros() const;
  double zero_ratio() const;

  BitStream prefix(std::size_t n) const;
  std::string to_string() const;

  // Packs into octets (MSB first, zero padded) and back.
  std::vector<std::uint8_t> to_bytes() const;
  static BitStream from_bytes(std::span<const std::uint8_t> bytes, std::size_t n_bits);

  friend bool operator==(const BitStream& a, const BitStream& b);

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
  std::size_t cursor_ = 0;
};

BitStream write_field(BitStream stream, std::uint64_t value, unsigned width);
double zero_ratio(const BitStream& stream);

}  // namespace simstego
