#include "simstego/iwsim.hpp"

#include <algorithm>
#include <bit>

#include "simstego/error.hpp"
#include "simstego/sim.hpp"

namespace simstego {

namespace {

unsigned width_for(std::uint32_t max_shifted) {
  return std::max(8U, static_cast<unsigned>(std::bit_width(max_shifted)));
}

std::uint32_t to_twos(std::int32_t v) {
  return static_cast<std::uint32_t>(v) & ((1U << kMinFieldBits) - 1);
}

std::int32_t from_twos(std::uint32_t raw) {
  const std::uint32_t sign = 1U << (kMinFieldBits - 1);
  return static_cast<std::int32_t>(raw ^ sign) - static_cast<std::int32_t>(sign);
}

BandBlock encode_high_band(const Band& band) {
  const auto [lo, hi] = std::minmax_element(band.values.begin(), band.values.end());
  SubbandSideInfo si;
  si.min_coeff = *lo;
  const auto span = static_cast<std::uint32_t>(*hi - *lo);
  si.code_width = width_for(span);
  std::vector<std::uint64_t> counts(span + 1, 0);
  for (auto v : band.values) ++counts[static_cast<std::uint32_t>(v - si.min_coeff)];
  si.value_list = rank_by_frequency(counts);
  si.format = si.value_list.size() <= 256 ? SideInfoFormat::Narrow : SideInfoFormat::Wide;

  const auto& codes = popcount_codes(si.code_width);
  std::vector<std::uint32_t> substitute(span + 1, 0);
  for (std::size_t i = 0; i < si.value_list.size(); ++i) substitute[si.value_list[i]] = codes[i];

  BandBlock block;
  si.write(block.side_info);
  for (auto v : band.values) {
    block.codes.write_field(substitute[static_cast<std::uint32_t>(v - si.min_coeff)], si.code_width);
  }
  return block;
}

Band read_high_band(BitStream& in, BandId id, std::size_t rows, std::size_t cols) {
  const auto si = SubbandSideInfo::read(in, id);
  std::vector<std::uint32_t> codes(rows * cols);
  for (auto& c : codes) c = in.read_field(si.code_width);
  const auto ranks = ranks_from_codes(codes, si.code_width, si.value_list.size());
  Band band{rows, cols, std::vector<std::int32_t>(codes.size())};
  for (std::size_t i = 0; i < codes.size(); ++i) {
    band.values[i] = static_cast<std::int32_t>(si.value_list[ranks[i]]) + si.min_coeff;
  }
  return band;
}

}  // namespace

std::size_t SubbandSideInfo::bit_length() const noexcept {
  const std::size_t fixed = format == SideInfoFormat::Narrow ? 1 + kMinFieldBits + 2 + 9
                                                             : 1 + kMinFieldBits + 1 + 10;
  return fixed + value_list.size() * code_width;
}

void SubbandSideInfo::write(BitStream& out) const {
  out.push_bit(format == SideInfoFormat::Wide);
  out.write_field(to_twos(min_coeff), kMinFieldBits);
  if (format == SideInfoFormat::Narrow) {
    out.write_field(code_width - 8, 2);
    out.write_field(value_list.size(), 9);
  } else {
    out.write_field(code_width - 9, 1);
    out.write_field(value_list.size(), 10);
  }
  for (auto v : value_list) out.write_field(v, code_width);
}

SubbandSideInfo SubbandSideInfo::read(BitStream& in, BandId band) {
  SubbandSideInfo si;
  si.format = in.read_bit() ? SideInfoFormat::Wide : SideInfoFormat::Narrow;
  si.min_coeff = from_twos(in.read_field(kMinFieldBits));
  std::size_t count = 0;
  if (si.format == SideInfoFormat::Narrow) {
    const auto indicator = in.read_field(2);
    if (indicator == 3) throw Error(Errc::MalformedWidth, "reserved code-width indicator 11");
    si.code_width = 8 + indicator;
    count = in.read_field(9);
    if (count == 0) throw Error(Errc::ZeroValueCount, "band side information lists no values");
    if (count > 256) {
      throw Error(Errc::ValueCountOutOfRange,
                  "narrow band header lists " + std::to_string(count) + " values");
    }
  } else {
    si.code_width = 9 + in.read_field(1);
    count = in.read_field(10);
    if (count <= 256) {
      throw Error(Errc::MalformedFormatFlag,
                  "wide band header with only " + std::to_string(count) + " values");
    }
    if (count > (std::size_t{1} << si.code_width)) {
      throw Error(Errc::ValueCountOutOfRange, "more values than codes of the declared width");
    }
  }
  const auto range = band_range(band);
  if (si.min_coeff < range.lo || si.min_coeff > range.hi) {
    throw Error(Errc::CoefficientOutOfRange,
                "band minimum " + std::to_string(si.min_coeff) + " outside band range");
  }
  si.value_list.resize(count);
  std::vector<bool> seen(std::size_t{1} << si.code_width, false);
  std::uint32_t max_shifted = 0;
  for (auto& v : si.value_list) {
    v = in.read_field(si.code_width);
    if (seen[v]) throw Error(Errc::DuplicateValue, "band side information repeats a value");
    seen[v] = true;
    if (static_cast<std::int64_t>(v) + si.min_coeff > range.hi) {
      throw Error(Errc::CoefficientOutOfRange, "listed coefficient exceeds band range");
    }
    max_shifted = std::max(max_shifted, v);
  }
  if (width_for(max_shifted) != si.code_width || !seen[0]) {
    throw Error(Errc::MalformedWidth, "band header inconsistent with its value list");
  }
  return si;
}

std::size_t subband_side_info_max_bits(BandId band) noexcept {
  if (band == BandId::LL) return kSimMaxSideInfoBits;
  const auto range = band_range(band);
  const auto n_values = static_cast<std::size_t>(range.hi - range.lo + 1);
  const std::size_t width = width_for(static_cast<std::uint32_t>(range.hi - range.lo));
  const std::size_t narrow = 1 + kMinFieldBits + 2 + 9 + std::min<std::size_t>(n_values, 256) * width;
  if (n_values <= 256) return narrow;
  return std::max(narrow, 1 + kMinFieldBits + 1 + 10 + n_values * width);
}

std::size_t iwsim_max_side_info_bits() noexcept {
  std::size_t total = 0;
  for (auto id : {BandId::LL, BandId::LH, BandId::HL, BandId::HH}) {
    total += subband_side_info_max_bits(id);
  }
  return total;
}

BitStream IwsimEncoded::serialize() const {
  BitStream out;
  for (const auto& b : blocks) {
    out.append(b.side_info);
    out.append(b.codes);
  }
  return out;
}

std::size_t IwsimEncoded::side_info_bits() const noexcept {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.side_info.size();
  return n;
}

std::size_t IwsimEncoded::code_bits() const noexcept {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.codes.size();
  return n;
}

IwsimEncoded iwsim_encode(const GrayImage& secret) {
  const auto bands = haar_forward(secret);
  IwsimEncoded out;
  std::vector<std::uint8_t> ll(bands.ll.values.begin(), bands.ll.values.end());
  auto sim = sim_encode_values(ll);
  out.blocks[0] = {std::move(sim.side_info), std::move(sim.payload)};
  out.blocks[1] = encode_high_band(bands.lh);
  out.blocks[2] = encode_high_band(bands.hl);
  out.blocks[3] = encode_high_band(bands.hh);
  return out;
}

BitStream iwsim_forward(const GrayImage& secret) { return iwsim_encode(secret).serialize(); }

GrayImage iwsim_read(BitStream& stream, std::size_t height, std::size_t width) {
  check_dimensions(height, width);
  const std::size_t rows = height / 2;
  const std::size_t cols = width / 2;
  SubBands bands;
  bands.source_height = height;
  bands.source_width = width;
  const auto ll = sim_read_values(stream, rows * cols);
  bands.ll = Band{rows, cols, std::vector<std::int32_t>(ll.begin(), ll.end())};
  bands.lh = read_high_band(stream, BandId::LH, rows, cols);
  bands.hl = read_high_band(stream, BandId::HL, rows, cols);
  bands.hh = read_high_band(stream, BandId::HH, rows, cols);
  return haar_inverse(bands);
}

GrayImage iwsim_inverse(const BitStream& stream, std::size_t height, std::size_t width) {
  BitStream copy = stream;
  copy.seek(0);
  return iwsim_read(copy, height, width);
}

std::size_t iwsim_overhead(const GrayImage& secret) { return iwsim_encode(secret).side_info_bits(); }

}  // namespace simstego
