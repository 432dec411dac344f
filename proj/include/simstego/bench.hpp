#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "simstego/bitstream.hpp"
#include "simstego/image.hpp"
#include "simstego/methods.hpp"
#include "simstego/steganalysis.hpp"
#include "simstego/stego.hpp"

namespace simstego {

struct BenchConfig {
  std::filesystem::path cover_dir;
  std::filesystem::path secret_dir;
  std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
  std::vector<double> rates{0.2, 0.4, 0.6, 0.8, 1.0};
  std::uint64_t seed = 0;
  std::vector<Detector> detectors{Detector::Dih, Detector::Rws, Detector::Lsbms};
  double lsbms_threshold = kDefaultLsbmsThreshold;
  // DIH/RWS count an image as detected above this estimate.
  double rate_threshold = 0.05;
  unsigned jobs = 0;  // 0: one per hardware thread
};

void validate(const BenchConfig& cfg);

inline constexpr std::string_view kTransformSchema = "# simstego transform-stats v1";
inline constexpr std::string_view kEmbeddingSchema = "# simstego embedding-bench v1";
inline constexpr std::string_view kDetectorSchema = "# simstego detector-bench v1";

std::string run_transform_stats(const BenchConfig& cfg);
std::string run_embedding_bench(const BenchConfig& cfg);
std::string run_detector_bench(const BenchConfig& cfg);

// One embedding at a payload rate, shared by the bench and the acceptance checks.
struct RateEmbedding {
  GrayImage stego;
  BitStream payload;
  bool complete = false;     // the whole secret stream was embedded
  double r0_cover = 0.0;     // zero ratio of the LSB plane that received the payload
  bool round_trip_ok = false;
};

// Mapping methods embed the secret's transform stream, truncated to floor(rate * (N - 1)) bits
// but never below header plus side information. Baselines embed the raw secret bits, repeated
// as needed, up to floor(rate * capacity).
RateEmbedding embed_at_rate(const GrayImage& cover, const GrayImage& secret, Method method,
                            double rate, std::uint64_t key);

}  // namespace simstego
