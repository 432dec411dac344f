#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "simstego/bitstream.hpp"
#include "simstego/decomp.hpp"
#include "simstego/image.hpp"
#include "simstego/methods.hpp"

namespace simstego {

// Per-pixel embedding rule on the three least significant codeword positions.
class MappingTable {
 public:
  static const MappingTable& for_scheme(SchemeKind kind);

  const Scheme& scheme() const noexcept { return scheme_; }
  bool has_row(unsigned pattern) const noexcept { return pattern < 8 && rows_[pattern].has_value(); }
  unsigned map_embed(unsigned pattern, unsigned bit) const;
  bool is_one_pattern(unsigned pattern) const noexcept { return (one_patterns_ >> pattern) & 1U; }

  // Stego value for cover value v carrying `bit`.
  std::uint8_t embed_value(std::uint8_t v, unsigned bit) const noexcept { return lut_[v][bit]; }
  unsigned decode(std::uint8_t v) const noexcept { return is_one_pattern(scheme_.low3(v)) ? 1U : 0U; }

  struct Override {
    std::uint8_t value;
    unsigned bit;
    std::uint8_t result;
  };
  // Cells where the table output leaves [0,255] and the nearest decodable value is used.
  const std::vector<Override>& overrides() const noexcept { return overrides_; }

 private:
  using Row = std::array<unsigned, 2>;
  MappingTable(Scheme scheme, std::array<std::optional<Row>, 8> rows, unsigned one_patterns);

  Scheme scheme_;
  std::array<std::optional<Row>, 8> rows_;
  unsigned one_patterns_;
  std::array<std::array<std::uint8_t, 2>, 256> lut_{};
  std::vector<Override> overrides_;
};

unsigned map_embed(unsigned pattern, unsigned bit, const MappingTable& table);

struct FormChoice {
  bool use_complement = false;
  double r = 0.0;
  double r_comp = 0.0;
};

FormChoice select_form(const GrayImage& cover, const Scheme& scheme);

struct EmbedConfig {
  Method method = Method::EbSim;
  std::uint64_t seed = 0;
};

constexpr std::size_t kHeaderBits = 32;

// Secret transform output split into its pieces, in stream order.
struct PayloadParts {
  BitStream header;
  std::vector<BitStream> side_info;
  std::vector<BitStream> codes;

  std::size_t fixed_bits() const noexcept;  // header plus all side information
  std::size_t total_bits() const noexcept;
  // header, then each block's side information followed by its codes
  BitStream full() const;
  // header, all side information, then codes cut so the length is max(target, fixed_bits())
  BitStream truncated(std::size_t target_bits) const;
};

PayloadParts payload_parts(const GrayImage& secret, Method method);
BitStream build_payload(const GrayImage& secret, Method method);

struct EmbedOutcome {
  GrayImage stego;
  FormChoice form;
};

// Embeds payload bits along the keyed traversal of a mapping method's cover decomposition.
EmbedOutcome embed_bits(const GrayImage& cover, const BitStream& payload, const MappingTable& table,
                        std::uint64_t seed);
// Reads n_bits payload bits (all N-1 when omitted).
BitStream extract_bits(const GrayImage& stego, const MappingTable& table, std::uint64_t seed,
                       std::optional<std::size_t> n_bits = std::nullopt);
// Parses the dimension header and the transform stream from the cursor.
GrayImage decode_payload(BitStream& bits, Method method);

GrayImage embed(const GrayImage& cover, const GrayImage& secret, const EmbedConfig& cfg);
GrayImage extract(const GrayImage& stego, const EmbedConfig& cfg);

}  // namespace simstego
