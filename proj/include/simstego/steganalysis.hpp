#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "simstego/image.hpp"

namespace simstego {

enum class Detector : std::uint8_t { Dih, Rws, Lsbms };

std::string_view detector_name(Detector d) noexcept;
std::optional<Detector> parse_detector(std::string_view name) noexcept;

enum class Verdict : std::uint8_t { Cover, Stego };

struct DetectorReport {
  Detector detector = Detector::Rws;
  double raw = 0.0;       // unclamped estimate, or the COM ratio
  double estimate = 0.0;  // rate estimates clamped to [-0.5, 1.5]
  std::optional<Verdict> verdict;
  bool degenerate = false;
  bool no_estimate = false;
  std::string variant;
};

constexpr double kReportMin = -0.5;
constexpr double kReportMax = 1.5;
constexpr double kDefaultLsbmsThreshold = 0.95;

// Weighted-stego estimate of the LSB replacement rate.
double rws_estimate(const GrayImage& img, bool* degenerate = nullptr);

// Difference-histogram estimate. Horizontal pixel pairs are grouped by the difference of their
// LSB-cleared values; LSB replacement mixes the parity states of each group linearly, and the
// cover symmetry between the two parity orders of each odd difference yields a quadratic in
// (1 - rate) pooled over the central groups. Throws NoEstimate when it has no usable root.
double dih_estimate(const GrayImage& img);
inline constexpr std::string_view kDihVariant = "pair-parity-quadratic";
inline constexpr int kDihGroups = 3;

// Histogram characteristic function center of mass over DFT bins 0..127.
double hcf_com(const Histogram& hist);
// Floor of each 2x2 block mean; the result must itself be a valid image.
GrayImage downsample2(const GrayImage& img);
double lsbms_ratio(const GrayImage& img);
Verdict lsbms_classify(double ratio, double threshold = kDefaultLsbmsThreshold) noexcept;

DetectorReport analyze(const GrayImage& img, Detector detector,
                       double threshold = kDefaultLsbmsThreshold);

}  // namespace simstego
