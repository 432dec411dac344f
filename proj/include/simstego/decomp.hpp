#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "simstego/image.hpp"

namespace simstego {

enum class SchemeKind : std::uint8_t { Binary, ExtendedBinary, Fibonacci, Lucas };

// Codeword bits packed into an integer: bit i is the coefficient of sequence position i.
using CodeBits = std::uint32_t;

class Scheme {
 public:
  static Scheme binary();
  // Powers of two plus one odd extra element x in [3, 255].
  static Scheme extended_binary(unsigned x = 3);
  static Scheme fibonacci();
  static Scheme lucas();

  SchemeKind kind() const noexcept { return kind_; }
  unsigned extra() const noexcept { return extra_; }
  std::string name() const;
  const std::vector<unsigned>& sequence() const noexcept { return sequence_; }
  unsigned length() const noexcept { return static_cast<unsigned>(sequence_.size()); }

  CodeBits decompose(std::uint8_t v) const noexcept { return codes_[v]; }
  // Weighted sum; throws NonCanonicalCode unless bits is the canonical code of its value.
  std::uint8_t compose(CodeBits bits) const;
  unsigned value_of(CodeBits bits) const noexcept;
  bool is_canonical(CodeBits bits) const noexcept;

  unsigned lsb(std::uint8_t v) const noexcept { return codes_[v] & 1U; }
  unsigned low3(std::uint8_t v) const noexcept { return codes_[v] & 7U; }

  std::string code_string(CodeBits bits) const;

 private:
  Scheme(SchemeKind kind, unsigned extra, std::vector<unsigned> sequence);

  SchemeKind kind_;
  unsigned extra_;
  std::vector<unsigned> sequence_;
  std::array<CodeBits, 256> codes_{};
};

double zero_lsb_ratio(const Scheme& scheme, const Histogram& hist);
double zero_lsb_ratio(const Scheme& scheme, const GrayImage& img);

struct PartitionSets {
  // Indexed [binary lsb][scheme lsb].
  std::array<std::array<std::vector<std::uint8_t>, 2>, 2> sets;
  const std::vector<std::uint8_t>& get(unsigned binary_lsb, unsigned scheme_lsb) const {
    return sets[binary_lsb][scheme_lsb];
  }
};

PartitionSets partition_sets(const Scheme& scheme);

}  // namespace simstego
