#include "simstego/image.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>

#include "simstego/error.hpp"

namespace simstego {

void check_dimensions(std::size_t height, std::size_t width) {
  if (height < 2 || width < 2) {
    throw Error(Errc::InvalidDimensions, "image dimensions must be at least 2x2, got " +
                                             std::to_string(height) + "x" + std::to_string(width));
  }
  if (height % 2 != 0 || width % 2 != 0) {
    throw Error(Errc::OddDimension, "image dimensions must be even, got " +
                                        std::to_string(height) + "x" + std::to_string(width));
  }
}

GrayImage::GrayImage(std::size_t height, std::size_t width, std::uint8_t fill)
    : height_(height), width_(width) {
  check_dimensions(height, width);
  pixels_.assign(height * width, fill);
}

GrayImage::GrayImage(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels)
    : height_(height), width_(width), pixels_(std::move(pixels)) {
  check_dimensions(height, width);
  if (pixels_.size() != height * width) {
    throw Error(Errc::LengthMismatch, "pixel buffer holds " + std::to_string(pixels_.size()) +
                                          " values, expected " + std::to_string(height * width));
  }
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t number() {
    skip_space_and_comments();
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (++digits > 9) throw Error(Errc::MalformedHeader, "PGM header field too long");
      ++pos_;
    }
    if (digits == 0) throw Error(Errc::MalformedHeader, "PGM header field is not a number");
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw Error(Errc::MalformedHeader, "missing whitespace after PGM maxval");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(Errc::BadMagic, "not a binary PGM (expected magic P5)");
  }
  HeaderReader reader(bytes);
  const auto width = reader.number();
  const auto height = reader.number();
  const auto maxval = reader.number();
  if (maxval != 255) {
    throw Error(Errc::MaxvalUnsupported, "PGM maxval " + std::to_string(maxval) + " unsupported");
  }
  reader.single_space();
  check_dimensions(height, width);
  const std::size_t n = height * width;
  if (bytes.size() - reader.pos() < n) {
    throw Error(Errc::TruncatedData, "PGM raster truncated: " +
                                         std::to_string(bytes.size() - reader.pos()) + " of " +
                                         std::to_string(n) + " bytes");
  }
  auto first = bytes.begin() + static_cast<std::ptrdiff_t>(reader.pos());
  return GrayImage(height, width, std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(n)));
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::Io, "read failed: " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::Io, "write failed: " + path.string());
}

GrayImage read_pgm_file(const std::filesystem::path& path) { return load_pgm(read_file(path)); }

void write_pgm_file(const std::filesystem::path& path, const GrayImage& img) {
  write_file(path, save_pgm(img));
}

GrayImage complement(const GrayImage& img) {
  GrayImage out = img;
  for (auto& v : out.pixels()) v = static_cast<std::uint8_t>(255 - v);
  return out;
}

Histogram histogram(const GrayImage& img) {
  Histogram h{};
  for (auto v : img.pixels()) ++h[v];
  return h;
}

GrayImage crop(const GrayImage& img, std::size_t row0, std::size_t col0, std::size_t rows,
               std::size_t cols) {
  if (row0 + rows > img.height() || col0 + cols > img.width()) {
    throw Error(Errc::InvalidDimensions, "crop window exceeds image");
  }
  std::vector<std::uint8_t> px;
  px.reserve(rows * cols);
  for (std::size_t r = row0; r < row0 + rows; ++r) {
    const auto* row = img.pixels().data() + r * img.width();
    px.insert(px.end(), row + col0, row + col0 + cols);
  }
  return GrayImage(rows, cols, std::move(px));
}

GrayImage crop_rows(const GrayImage& img, std::size_t row0, std::size_t rows) {
  return crop(img, row0, 0, rows, img.width());
}

}  // namespace simstego
