#include "simstego/bitstream.hpp"

#include <bit>

#include "simstego/error.hpp"

namespace simstego {

BitStream BitStream::from_string(std::string_view bits) {
  BitStream s;
  for (char c : bits) {
    if (c == '0' || c == '1') s.push_bit(c == '1');
  }
  return s;
}

void BitStream::seek(std::size_t pos) {
  if (pos > size_) throw Error(Errc::StreamExhausted, "seek beyond end of bit stream");
  cursor_ = pos;
}

void BitStream::set_bit(std::size_t i, bool b) {
  const std::uint64_t mask = std::uint64_t{1} << (63 - (i & 63));
  if (b) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

void BitStream::push_bit(bool b) {
  if ((size_ & 63) == 0) words_.push_back(0);
  ++size_;
  if (b) set_bit(size_ - 1, true);
}

void BitStream::write_field(std::uint64_t value, unsigned width) {
  if (width < 1 || width > 32) {
    throw Error(Errc::FieldOverflow, "field width " + std::to_string(width) + " outside [1,32]");
  }
  if (value >> width) {
    throw Error(Errc::FieldOverflow, "value " + std::to_string(value) + " does not fit in " +
                                         std::to_string(width) + " bits");
  }
  for (unsigned k = width; k-- > 0;) push_bit((value >> k) & 1U);
}

void BitStream::append(const BitStream& other) {
  for (std::size_t i = 0; i < other.size_; ++i) push_bit(other.bit(i));
}

bool BitStream::read_bit() {
  if (cursor_ >= size_) throw Error(Errc::StreamExhausted, "bit stream exhausted");
  return bit(cursor_++);
}

std::uint32_t BitStream::read_field(unsigned width) {
  if (width < 1 || width > 32) {
    throw Error(Errc::FieldOverflow, "field width " + std::to_string(width) + " outside [1,32]");
  }
  if (remaining() < width) {
    throw Error(Errc::StreamExhausted, "need " + std::to_string(width) + " bits, " +
                                           std::to_string(remaining()) + " left");
  }
  std::uint32_t v = 0;
  for (unsigned k = 0; k < width; ++k) v = (v << 1) | static_cast<std::uint32_t>(bit(cursor_++));
  return v;
}

std::size_t BitStream::count_zeros() const {
  std::size_t ones = 0;
  for (auto w : words_) ones += static_cast<std::size_t>(std::popcount(w));
  return size_ - ones;
}

double BitStream::zero_ratio() const {
  if (size_ == 0) throw Error(Errc::EmptyStream, "zero ratio of an empty stream");
  return static_cast<double>(count_zeros()) / static_cast<double>(size_);
}

BitStream BitStream::prefix(std::size_t n) const {
  if (n > size_) throw Error(Errc::StreamExhausted, "prefix longer than stream");
  BitStream out;
  out.words_.assign(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>((n + 63) / 64));
  out.size_ = n;
  if (n & 63) out.words_.back() &= ~std::uint64_t{0} << (64 - (n & 63));
  return out;
}

std::string BitStream::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(bit(i) ? '1' : '0');
  return s;
}

std::vector<std::uint8_t> BitStream::to_bytes() const {
  std::vector<std::uint8_t> out((size_ + 7) / 8, 0);
  for (std::size_t i = 0; i < size_; ++i) {
    if (bit(i)) out[i / 8] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
  }
  return out;
}

BitStream BitStream::from_bytes(std::span<const std::uint8_t> bytes, std::size_t n_bits) {
  if (n_bits > bytes.size() * 8) {
    throw Error(Errc::StreamExhausted, "byte buffer shorter than declared bit length");
  }
  BitStream s;
  for (std::size_t i = 0; i < n_bits; ++i) s.push_bit((bytes[i / 8] >> (7 - i % 8)) & 1U);
  return s;
}

bool operator==(const BitStream& a, const BitStream& b) {
  return a.size_ == b.size_ && a.words_ == b.words_;
}

BitStream write_field(BitStream stream, std::uint64_t value, unsigned width) {
  stream.write_field(value, width);
  return stream;
}

double zero_ratio(const BitStream& stream) { return stream.zero_ratio(); }

}  // namespace simstego
