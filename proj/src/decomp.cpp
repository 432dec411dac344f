#include "simstego/decomp.hpp"

#include <algorithm>
#include <numeric>

#include "simstego/error.hpp"

namespace simstego {

Scheme::Scheme(SchemeKind kind, unsigned extra, std::vector<unsigned> sequence)
    : kind_(kind), extra_(extra), sequence_(std::move(sequence)) {
  std::vector<unsigned> by_value(sequence_.size());
  std::iota(by_value.begin(), by_value.end(), 0U);
  std::sort(by_value.begin(), by_value.end(),
            [&](unsigned a, unsigned b) { return sequence_[a] > sequence_[b]; });
  for (unsigned v = 0; v < 256; ++v) {
    unsigned rest = v;
    CodeBits bits = 0;
    for (unsigned pos : by_value) {
      if (sequence_[pos] <= rest) {
        rest -= sequence_[pos];
        bits |= CodeBits{1} << pos;
      }
    }
    codes_[v] = bits;
  }
}

Scheme Scheme::binary() { return Scheme(SchemeKind::Binary, 0, {1, 2, 4, 8, 16, 32, 64, 128}); }

Scheme Scheme::extended_binary(unsigned x) {
  if (x < 3 || x > 255 || x % 2 == 0) {
    throw Error(Errc::InvalidArgument, "extended-binary element must be odd in [3,255]");
  }
  std::vector<unsigned> seq{1, 2, 4, 8, 16, 32, 64, 128, x};
  std::sort(seq.begin(), seq.end());
  return Scheme(SchemeKind::ExtendedBinary, x, std::move(seq));
}

Scheme Scheme::fibonacci() {
  return Scheme(SchemeKind::Fibonacci, 0, {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233});
}

Scheme Scheme::lucas() {
  return Scheme(SchemeKind::Lucas, 0, {2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199});
}

std::string Scheme::name() const {
  switch (kind_) {
    case SchemeKind::Binary: return "binary";
    case SchemeKind::ExtendedBinary: return "extended-binary-" + std::to_string(extra_);
    case SchemeKind::Fibonacci: return "fibonacci";
    case SchemeKind::Lucas: return "lucas";
  }
  return "unknown";
}

unsigned Scheme::value_of(CodeBits bits) const noexcept {
  unsigned v = 0;
  for (unsigned i = 0; i < sequence_.size(); ++i) {
    if ((bits >> i) & 1U) v += sequence_[i];
  }
  return v;
}

bool Scheme::is_canonical(CodeBits bits) const noexcept {
  if (bits >> sequence_.size()) return false;
  const unsigned v = value_of(bits);
  return v <= 255 && codes_[v] == bits;
}

std::uint8_t Scheme::compose(CodeBits bits) const {
  if (!is_canonical(bits)) {
    throw Error(Errc::NonCanonicalCode, name() + " code " + code_string(bits) + " is not canonical");
  }
  return static_cast<std::uint8_t>(value_of(bits));
}

std::string Scheme::code_string(CodeBits bits) const {
  std::string s;
  for (unsigned i = length(); i-- > 0;) s.push_back(((bits >> i) & 1U) ? '1' : '0');
  return s;
}

double zero_lsb_ratio(const Scheme& scheme, const Histogram& hist) {
  std::uint64_t zeros = 0;
  std::uint64_t total = 0;
  for (unsigned v = 0; v < 256; ++v) {
    total += hist[v];
    if (scheme.lsb(static_cast<std::uint8_t>(v)) == 0) zeros += hist[v];
  }
  return total == 0 ? 0.0 : static_cast<double>(zeros) / static_cast<double>(total);
}

double zero_lsb_ratio(const Scheme& scheme, const GrayImage& img) {
  return zero_lsb_ratio(scheme, histogram(img));
}

PartitionSets partition_sets(const Scheme& scheme) {
  PartitionSets out;
  for (unsigned v = 0; v < 256; ++v) {
    const auto b = static_cast<std::uint8_t>(v);
    out.sets[v & 1U][scheme.lsb(b)].push_back(b);
  }
  return out;
}

}  // namespace simstego
