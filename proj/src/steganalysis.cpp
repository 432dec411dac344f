#include "simstego/steganalysis.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "simstego/error.hpp"

namespace simstego {

std::string_view detector_name(Detector d) noexcept {
  switch (d) {
    case Detector::Dih: return "dih";
    case Detector::Rws: return "rws";
    case Detector::Lsbms: return "lsbms";
  }
  return "unknown";
}

std::optional<Detector> parse_detector(std::string_view name) noexcept {
  for (auto d : {Detector::Dih, Detector::Rws, Detector::Lsbms}) {
    if (detector_name(d) == name) return d;
  }
  return std::nullopt;
}

double rws_estimate(const GrayImage& img, bool* degenerate) {
  const std::size_t h = img.height();
  const std::size_t w = img.width();
  if (h < 3 || w < 3) throw Error(Errc::ImageTooSmall, "weighted-stego analysis needs 3x3 pixels");
  const auto& px = img.pixels();
  const bool flat = std::all_of(px.begin(), px.end(), [&](auto v) { return v == px[0]; });
  if (degenerate) *degenerate = flat;
  if (flat) return 0.0;

  double weight_sum = 0.0;
  double acc = 0.0;
  for (std::size_t r = 0; r < h; ++r) {
    const std::size_t up = r == 0 ? 0 : r - 1;
    const std::size_t down = r + 1 == h ? r : r + 1;
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t left = c == 0 ? 0 : c - 1;
      const std::size_t right = c + 1 == w ? c : c + 1;
      const std::array<double, 4> n = {double(img.at(up, c)), double(img.at(down, c)),
                                       double(img.at(r, left)), double(img.at(r, right))};
      const double pred = (n[0] + n[1] + n[2] + n[3]) / 4.0;
      double var = 0.0;
      for (double v : n) var += (v - pred) * (v - pred);
      var /= 4.0;
      const double wt = 1.0 / (5.0 + var);
      const double x = img.at(r, c);
      const double flip_diff = (img.at(r, c) & 1U) ? 1.0 : -1.0;
      weight_sum += wt;
      acc += wt * flip_diff * (x - pred);
    }
  }
  return 2.0 * acc / weight_sum;
}

double dih_estimate(const GrayImage& img) {
  if (img.width() < 2) throw Error(Errc::ImageTooSmall, "difference histogram needs width >= 2");
  // Groups indexed by cleared difference / 2 in [-127, 127], offset by 127.
  constexpr int kOffset = 127;
  std::array<double, 255> same{}, up{}, down{};
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c + 1 < img.width(); ++c) {
      const int a = img.at(r, c);
      const int b = img.at(r, c + 1);
      const int g = ((b & ~1) - (a & ~1)) / 2 + kOffset;
      const int pa = a & 1;
      const int pb = b & 1;
      if (pa == pb) {
        same[g] += 1;
      } else if (pb > pa) {
        up[g] += 1;
      } else {
        down[g] += 1;
      }
    }
  }
  // Per group: total T, parity imbalance D = U - L (scales with s), and E - U - L (scales with s^2).
  double qa = 0.0, qb = 0.0, qc = 0.0;
  for (int i = -kDihGroups; i < kDihGroups; ++i) {
    const int j = i + kOffset;
    const int k = j + 1;
    const double sign = i >= 0 ? 1.0 : -1.0;
    const double tj = same[j] + up[j] + down[j];
    const double tk = same[k] + up[k] + down[k];
    qa += sign * (tj - tk) / 4.0;
    qb += sign * ((up[j] - down[j]) + (up[k] - down[k])) / 2.0;
    qc -= sign * ((same[j] - up[j] - down[j]) - (same[k] - up[k] - down[k])) / 4.0;
  }
  if (!(qa > 0.0)) throw Error(Errc::NoEstimate, "difference histogram has no central peak");
  const double disc = qb * qb - 4.0 * qa * qc;
  // Larger root, continued through a slightly negative discriminant.
  const double root = std::copysign(std::sqrt(std::abs(disc)), disc);
  const double rate = 1.0 - (-qb + root) / (2.0 * qa);
  if (!(rate >= kReportMin && rate <= kReportMax)) {
    throw Error(Errc::NoEstimate, "difference histogram root outside the report range");
  }
  return rate;
}

double hcf_com(const Histogram& hist) {
  constexpr std::size_t kBins = 256;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < kBins / 2; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < kBins; ++n) {
      if (hist[n] == 0) continue;
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((k * n) % kBins) / kBins;
      acc += static_cast<double>(hist[n]) * std::polar(1.0, angle);
    }
    const double mag = std::abs(acc);
    num += static_cast<double>(k) * mag;
    den += mag;
  }
  assert(den > 0.0);
  return num / den;
}

GrayImage downsample2(const GrayImage& img) {
  const std::size_t h = img.height() / 2;
  const std::size_t w = img.width() / 2;
  std::vector<std::uint8_t> px(h * w);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const unsigned sum = img.at(2 * r, 2 * c) + img.at(2 * r, 2 * c + 1) +
                           img.at(2 * r + 1, 2 * c) + img.at(2 * r + 1, 2 * c + 1);
      px[r * w + c] = static_cast<std::uint8_t>(sum / 4);
    }
  }
  return GrayImage(h, w, std::move(px));
}

namespace {

Histogram downsampled_histogram(const GrayImage& img) {
  Histogram hist{};
  for (std::size_t r = 0; r + 1 < img.height(); r += 2) {
    for (std::size_t c = 0; c + 1 < img.width(); c += 2) {
      const unsigned sum = img.at(r, c) + img.at(r, c + 1) + img.at(r + 1, c) + img.at(r + 1, c + 1);
      ++hist[sum / 4];
    }
  }
  return hist;
}

}  // namespace

double lsbms_ratio(const GrayImage& img) {
  if (img.height() % 2 || img.width() % 2) {
    throw Error(Errc::OddDimension, "HCF analysis needs even dimensions");
  }
  return hcf_com(histogram(img)) / hcf_com(downsampled_histogram(img));
}

Verdict lsbms_classify(double ratio, double threshold) noexcept {
  return ratio < threshold ? Verdict::Stego : Verdict::Cover;
}

DetectorReport analyze(const GrayImage& img, Detector detector, double threshold) {
  DetectorReport rep;
  rep.detector = detector;
  switch (detector) {
    case Detector::Rws:
      rep.variant = "weighted-stego";
      rep.raw = rws_estimate(img, &rep.degenerate);
      rep.estimate = std::clamp(rep.raw, kReportMin, kReportMax);
      break;
    case Detector::Dih:
      rep.variant = std::string(kDihVariant);
      try {
        rep.raw = dih_estimate(img);
        rep.estimate = rep.raw;
      } catch (const Error& e) {
        if (e.code() != Errc::NoEstimate) throw;
        rep.no_estimate = true;
        rep.raw = rep.estimate = std::nan("");
      }
      break;
    case Detector::Lsbms:
      rep.variant = "hcf-com";
      rep.raw = rep.estimate = lsbms_ratio(img);
      rep.verdict = lsbms_classify(rep.raw, threshold);
      break;
  }
  return rep;
}

}  // namespace simstego
