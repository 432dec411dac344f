#include "simstego/stego.hpp"

#include <cstdlib>

#include "simstego/error.hpp"
#include "simstego/iwsim.hpp"
#include "simstego/prng.hpp"
#include "simstego/sim.hpp"

namespace simstego {

namespace {

constexpr unsigned p(unsigned b2, unsigned b1, unsigned b0) { return (b2 << 2) | (b1 << 1) | b0; }

}  // namespace

MappingTable::MappingTable(Scheme scheme, std::array<std::optional<Row>, 8> rows,
                           unsigned one_patterns)
    : scheme_(std::move(scheme)), rows_(rows), one_patterns_(one_patterns) {
  for (unsigned v = 0; v < 256; ++v) {
    const auto value = static_cast<std::uint8_t>(v);
    const CodeBits code = scheme_.decompose(value);
    for (unsigned bit = 0; bit < 2; ++bit) {
      const CodeBits out = (code & ~CodeBits{7}) | map_embed(code & 7U, bit);
      const unsigned target = scheme_.value_of(out);
      if (target <= 255) {
        if (!scheme_.is_canonical(out)) {
          throw std::logic_error(scheme_.name() + " mapping table is not closed");
        }
        lut_[v][bit] = static_cast<std::uint8_t>(target);
        continue;
      }
      // Out of range: nearest value that decodes to the bit, smaller value on ties.
      int best = -1;
      for (int d = 1; d < 256 && best < 0; ++d) {
        for (int cand : {static_cast<int>(v) - d, static_cast<int>(v) + d}) {
          if (cand >= 0 && cand <= 255 && decode(static_cast<std::uint8_t>(cand)) == bit) {
            best = cand;
            break;
          }
        }
      }
      lut_[v][bit] = static_cast<std::uint8_t>(best);
      overrides_.push_back({value, bit, static_cast<std::uint8_t>(best)});
    }
  }
}

const MappingTable& MappingTable::for_scheme(SchemeKind kind) {
  using R = std::optional<Row>;
  // Outputs for secret bit 0 and 1, keyed by the cover pattern (b2 b1 b0).
  static const MappingTable fib(
      Scheme::fibonacci(),
      {R{{p(0, 0, 0), p(0, 0, 1)}}, R{{p(0, 1, 0), p(0, 0, 1)}}, R{{p(0, 1, 0), p(0, 0, 1)}},
       std::nullopt, R{{p(1, 0, 0), p(1, 0, 1)}}, R{{p(1, 0, 0), p(1, 0, 1)}}, std::nullopt,
       std::nullopt},
      (1U << p(0, 0, 1)) | (1U << p(1, 0, 1)));
  static const MappingTable lucas(
      Scheme::lucas(),
      {R{{p(0, 0, 0), p(0, 0, 1)}}, R{{p(0, 1, 0), p(0, 0, 1)}}, R{{p(0, 1, 0), p(0, 0, 1)}},
       std::nullopt, R{{p(1, 0, 0), p(0, 0, 1)}}, std::nullopt, std::nullopt, std::nullopt},
      1U << p(0, 0, 1));
  static const MappingTable eb(
      Scheme::extended_binary(3),
      {R{{p(0, 0, 0), p(0, 0, 1)}}, R{{p(0, 1, 0), p(0, 0, 1)}}, R{{p(0, 1, 0), p(0, 0, 1)}},
       std::nullopt, R{{p(1, 0, 0), p(0, 0, 1)}}, std::nullopt, std::nullopt, std::nullopt},
      1U << p(0, 0, 1));
  switch (kind) {
    case SchemeKind::Fibonacci: return fib;
    case SchemeKind::Lucas: return lucas;
    case SchemeKind::ExtendedBinary: return eb;
    case SchemeKind::Binary: break;
  }
  throw Error(Errc::InvalidArgument, "no mapping table for the binary scheme");
}

unsigned MappingTable::map_embed(unsigned pattern, unsigned bit) const {
  if (!has_row(pattern) || bit > 1) {
    throw Error(Errc::InvalidPattern, "pattern " + std::to_string(pattern) + " is not a table row");
  }
  return (*rows_[pattern])[bit];
}

unsigned map_embed(unsigned pattern, unsigned bit, const MappingTable& table) {
  return table.map_embed(pattern, bit);
}

FormChoice select_form(const GrayImage& cover, const Scheme& scheme) {
  const auto hist = histogram(cover);
  Histogram flipped{};
  for (unsigned v = 0; v < 256; ++v) flipped[255 - v] = hist[v];
  FormChoice f;
  f.r = zero_lsb_ratio(scheme, hist);
  f.r_comp = zero_lsb_ratio(scheme, flipped);
  f.use_complement = f.r_comp > f.r;
  return f;
}

std::size_t PayloadParts::fixed_bits() const noexcept {
  std::size_t n = header.size();
  for (const auto& s : side_info) n += s.size();
  return n;
}

std::size_t PayloadParts::total_bits() const noexcept {
  std::size_t n = fixed_bits();
  for (const auto& c : codes) n += c.size();
  return n;
}

BitStream PayloadParts::full() const {
  BitStream out = header;
  for (std::size_t i = 0; i < side_info.size(); ++i) {
    out.append(side_info[i]);
    out.append(codes[i]);
  }
  return out;
}

BitStream PayloadParts::truncated(std::size_t target_bits) const {
  BitStream out = header;
  for (const auto& s : side_info) out.append(s);
  for (const auto& c : codes) {
    if (out.size() >= target_bits) break;
    const std::size_t take = std::min(c.size(), target_bits - out.size());
    out.append(c.prefix(take));
  }
  return out;
}

PayloadParts payload_parts(const GrayImage& secret, Method method) {
  if (!is_mapping(method)) {
    throw Error(Errc::InvalidArgument, std::string(method_name(method)) + " carries raw payloads");
  }
  if (secret.height() > 0xFFFF || secret.width() > 0xFFFF) {
    throw Error(Errc::InvalidDimensions, "secret dimensions exceed the 16-bit header fields");
  }
  PayloadParts parts;
  parts.header.write_field(secret.height(), 16);
  parts.header.write_field(secret.width(), 16);
  if (method == Method::EbSim) {
    auto enc = sim_forward(secret);
    parts.side_info.push_back(std::move(enc.side_info));
    parts.codes.push_back(std::move(enc.payload));
  } else {
    auto enc = iwsim_encode(secret);
    for (auto& b : enc.blocks) {
      parts.side_info.push_back(std::move(b.side_info));
      parts.codes.push_back(std::move(b.codes));
    }
  }
  return parts;
}

BitStream build_payload(const GrayImage& secret, Method method) {
  return payload_parts(secret, method).full();
}

EmbedOutcome embed_bits(const GrayImage& cover, const BitStream& payload, const MappingTable& table,
                        std::uint64_t seed) {
  const std::size_t available = cover.size() - 1;
  if (payload.size() > available) throw CapacityError(payload.size(), available);
  EmbedOutcome out{cover, select_form(cover, table.scheme())};
  auto& px = out.stego.pixels();
  if (out.form.use_complement) {
    for (auto& v : px) v = static_cast<std::uint8_t>(255 - v);
  }
  const auto order = pixel_order(seed, cover.size());
  for (std::size_t k = 0; k < payload.size(); ++k) {
    auto& v = px[order[k]];
    v = table.embed_value(v, payload.bit(k) ? 1U : 0U);
  }
  if (out.form.use_complement) {
    for (auto& v : px) v = static_cast<std::uint8_t>(255 - v);
  }
  auto& last = px.back();
  last = static_cast<std::uint8_t>((last & 0xFEU) | (out.form.use_complement ? 1U : 0U));
  return out;
}

BitStream extract_bits(const GrayImage& stego, const MappingTable& table, std::uint64_t seed,
                       std::optional<std::size_t> n_bits) {
  const std::size_t available = stego.size() - 1;
  const std::size_t n = n_bits.value_or(available);
  if (n > available) throw CapacityError(n, available);
  const bool flipped = (stego.pixels().back() & 1U) != 0;
  const auto order = pixel_order(seed, stego.size());
  BitStream bits;
  for (std::size_t k = 0; k < n; ++k) {
    std::uint8_t v = stego[order[k]];
    if (flipped) v = static_cast<std::uint8_t>(255 - v);
    bits.push_bit(table.decode(v) != 0);
  }
  return bits;
}

GrayImage decode_payload(BitStream& bits, Method method) {
  try {
    const std::size_t height = bits.read_field(16);
    const std::size_t width = bits.read_field(16);
    if (height == 0 || width == 0) {
      throw Error(Errc::InvalidDimensions, "embedded secret has a zero dimension");
    }
    if (method == Method::EbSim) return sim_read(bits, height, width);
    return iwsim_read(bits, height, width);
  } catch (const Error& e) {
    if (e.code() == Errc::StreamExhausted) {
      throw Error(Errc::StreamExhausted, "embedded stream overruns the available pixels");
    }
    throw;
  }
}

GrayImage embed(const GrayImage& cover, const GrayImage& secret, const EmbedConfig& cfg) {
  const auto& table = MappingTable::for_scheme(method_scheme(cfg.method).kind());
  return embed_bits(cover, build_payload(secret, cfg.method), table, cfg.seed).stego;
}

GrayImage extract(const GrayImage& stego, const EmbedConfig& cfg) {
  const auto& table = MappingTable::for_scheme(method_scheme(cfg.method).kind());
  auto bits = extract_bits(stego, table, cfg.seed);
  return decode_payload(bits, cfg.method);
}

}  // namespace simstego
