#include "simstego/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "simstego/baselines.hpp"
#include "simstego/bench.hpp"
#include "simstego/error.hpp"
#include "simstego/iwsim.hpp"
#include "simstego/metrics.hpp"
#include "simstego/sim.hpp"
#include "simstego/steganalysis.hpp"
#include "simstego/stego.hpp"

namespace simstego {

namespace {

constexpr const char* kFormats = R"(Formats:
  image        binary PGM (P5, maxval 255, even dimensions)
  payload/1    16-bit secret height, 16-bit secret width, transform stream (MSB first)
  sim-si/1     9-bit value count, then 8 bits per original value, most frequent first
  iwsim-si/1   per high band: 1-bit format, 11-bit two's-complement minimum,
               width indicator (2 or 1 bits), count (9 or 10 bits), value list
  bits/1       transform debug container: 32-bit big-endian bit length, packed bits
  traversal/1  SplitMix64-seeded xoshiro256**, Fisher-Yates over pixels 0..N-2;
               last pixel's binary LSB flags the complement form)";

int exit_code(ErrorClass c) {
  switch (c) {
    case ErrorClass::Usage: return 1;
    case ErrorClass::Capacity: return 2;
    case ErrorClass::Parse: return 3;
    case ErrorClass::Io: return 4;
  }
  return 1;
}

Method require_method(const std::string& name) {
  auto m = parse_method(name);
  if (!m) throw Error(Errc::InvalidArgument, "unknown method " + name);
  return *m;
}

std::vector<std::uint8_t> bits_container(const BitStream& bits) {
  std::vector<std::uint8_t> out;
  const auto n = static_cast<std::uint32_t>(bits.size());
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(n >> shift));
  const auto packed = bits.to_bytes();
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

struct Options {
  std::uint64_t seed = 0;
  bool quiet = false;

  std::string transform_kind;
  std::string in, out, dir;
  std::string method, cover, secret, payload, stego;
  std::size_t bits = 0;
  std::string detector;
  double threshold = kDefaultLsbmsThreshold;

  std::string covers, secrets, kind = "embedding";
  std::vector<std::string> methods, detectors;
  std::vector<double> rates;
  unsigned jobs = 0;
};

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-dominant steganography toolkit for grayscale images", "simstego"};
  app.footer(kFormats);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Key for every pseudo-random choice")->default_val(0);
  app.add_flag("--quiet", o.quiet, "Suppress result lines");

  auto* transform = app.add_subcommand("transform", "Write a secret's transform stream (bits/1)");
  transform->add_option("kind", o.transform_kind, "sim or iwsim")
      ->required()
      ->check(CLI::IsMember({"sim", "iwsim"}));
  transform->add_option("--in", o.in, "Secret image")->required();
  transform->add_option("--out", o.out, "Output container")->required();

  auto* stats = app.add_subcommand("decompose-stats", "Per-scheme zero-LSB ratios as CSV");
  stats->add_option("--dir", o.dir, "Directory of PGM images")->required();

  const std::vector<std::string> method_names = [] {
    std::vector<std::string> v;
    for (auto m : kAllMethods) v.emplace_back(method_name(m));
    return v;
  }();

  auto* embed_cmd = app.add_subcommand("embed", "Hide a secret image or raw payload");
  embed_cmd->add_option("--method", o.method)->required()->check(CLI::IsMember(method_names));
  embed_cmd->add_option("--cover", o.cover)->required();
  auto* secret_opt = embed_cmd->add_option("--secret", o.secret, "Secret image (mapping methods)");
  auto* payload_opt = embed_cmd->add_option("--payload", o.payload, "Raw payload file (baselines)");
  secret_opt->excludes(payload_opt);
  embed_cmd->add_option("--out", o.out)->required();

  auto* extract_cmd = app.add_subcommand("extract", "Recover a secret image or raw payload");
  extract_cmd->add_option("--method", o.method)->required()->check(CLI::IsMember(method_names));
  extract_cmd->add_option("--stego", o.stego)->required();
  extract_cmd->add_option("--bits", o.bits, "Payload length in bits (baselines)");
  extract_cmd->add_option("--out", o.out)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Run one detector on an image");
  analyze_cmd->add_option("--detector", o.detector)
      ->required()
      ->check(CLI::IsMember({"dih", "rws", "lsbms"}));
  analyze_cmd->add_option("--in", o.in)->required();
  analyze_cmd->add_option("--threshold", o.threshold, "LSBMS decision threshold")
      ->default_val(kDefaultLsbmsThreshold);

  auto* bench_cmd = app.add_subcommand("bench", "Corpus experiments written as CSV");
  bench_cmd->add_option("--covers", o.covers);
  bench_cmd->add_option("--secrets", o.secrets)->required();
  bench_cmd->add_option("--kind", o.kind)
      ->check(CLI::IsMember({"embedding", "detector", "transform"}))
      ->default_val("embedding");
  bench_cmd->add_option("--methods", o.methods)->delimiter(',')->check(CLI::IsMember(method_names));
  bench_cmd->add_option("--rates", o.rates)->delimiter(',');
  bench_cmd->add_option("--detectors", o.detectors)
      ->delimiter(',')
      ->check(CLI::IsMember({"dih", "rws", "lsbms"}));
  bench_cmd->add_option("--threshold", o.threshold, "LSBMS decision threshold")
      ->default_val(kDefaultLsbmsThreshold);
  bench_cmd->add_option("--jobs", o.jobs, "Worker threads (0: all cores)")->default_val(0);
  bench_cmd->add_option("--out", o.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto say = [&](const std::string& line) {
    if (!o.quiet) out << line << '\n';
  };

  try {
    if (*transform) {
      const auto secret = read_pgm_file(o.in);
      BitStream bits;
      if (o.transform_kind == "sim") {
        auto enc = sim_forward(secret);
        bits = enc.side_info;
        bits.append(enc.payload);
      } else {
        bits = iwsim_forward(secret);
      }
      write_file(o.out, bits_container(bits));
      say(fmt::format("transform,{},{},{:.6f}", o.transform_kind, bits.size(), bits.zero_ratio()));
    } else if (*stats) {
      std::vector<std::filesystem::path> files;
      if (!std::filesystem::is_directory(o.dir)) throw Error(Errc::Io, "not a directory: " + o.dir);
      for (const auto& e : std::filesystem::directory_iterator(o.dir)) {
        if (e.is_regular_file() && e.path().extension() == ".pgm") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      std::vector<Scheme> schemes{Scheme::binary(), Scheme::extended_binary(3)};
      for (unsigned x : {5U, 11U, 23U, 47U, 97U}) schemes.push_back(Scheme::extended_binary(x));
      schemes.push_back(Scheme::fibonacci());
      schemes.push_back(Scheme::lucas());
      out << "file,scheme,ratio\n";
      for (const auto& f : files) {
        const auto hist = histogram(read_pgm_file(f));
        for (const auto& s : schemes) {
          out << fmt::format("{},{},{:.6f}\n", f.filename().string(), s.name(), zero_lsb_ratio(s, hist));
        }
      }
    } else if (*embed_cmd) {
      const Method method = require_method(o.method);
      const auto cover = read_pgm_file(o.cover);
      if (is_mapping(method)) {
        if (o.secret.empty()) throw Error(Errc::InvalidArgument, "--secret is required for " + o.method);
        const auto secret = read_pgm_file(o.secret);
        const auto payload = build_payload(secret, method);
        const auto& table = MappingTable::for_scheme(method_scheme(method).kind());
        const auto res = embed_bits(cover, payload, table, o.seed);
        write_pgm_file(o.out, res.stego);
        say(fmt::format("embed,{},{},{},{}", o.method, payload.size(), cover.size() - 1,
                        res.form.use_complement ? 1 : 0));
      } else {
        if (o.payload.empty()) throw Error(Errc::InvalidArgument, "--payload is required for " + o.method);
        const auto bytes = read_file(o.payload);
        const auto bits = BitStream::from_bytes(bytes, bytes.size() * 8);
        GrayImage stego;
        if (method == Method::Lsbr) {
          stego = lsbr_embed(cover, bits, o.seed);
        } else if (method == Method::Lsbm) {
          stego = lsbm_embed(cover, bits, o.seed);
        } else {
          stego = lsbmr_embed(cover, bits, o.seed);
        }
        write_pgm_file(o.out, stego);
        say(fmt::format("embed,{},{},{},0", o.method, bits.size(), capacity_bits(method, cover)));
      }
    } else if (*extract_cmd) {
      const Method method = require_method(o.method);
      const auto stego = read_pgm_file(o.stego);
      if (is_mapping(method)) {
        const auto secret = extract(stego, {method, o.seed});
        write_pgm_file(o.out, secret);
        say(fmt::format("extract,{},{},{}", o.method, secret.height(), secret.width()));
      } else {
        if (o.bits == 0) throw Error(Errc::InvalidArgument, "--bits is required for " + o.method);
        BitStream bits;
        if (method == Method::Lsbmr) {
          bits = lsbmr_extract(stego, o.bits, o.seed);
        } else {
          bits = lsbr_extract(stego, o.bits, o.seed);
        }
        write_file(o.out, bits.to_bytes());
        say(fmt::format("extract,{},{}", o.method, bits.size()));
      }
    } else if (*analyze_cmd) {
      const auto img = read_pgm_file(o.in);
      const auto rep = analyze(img, *parse_detector(o.detector), o.threshold);
      const char* verdict = rep.verdict ? (*rep.verdict == Verdict::Stego ? "stego" : "cover") : "";
      const std::string estimate = rep.no_estimate ? "nan" : fmt::format("{:.6f}", rep.estimate);
      out << fmt::format("{},{},{},{},{}\n", o.in, o.detector, estimate, verdict, rep.variant);
    } else if (*bench_cmd) {
      BenchConfig cfg;
      cfg.cover_dir = o.covers;
      cfg.secret_dir = o.secrets;
      cfg.seed = o.seed;
      cfg.jobs = o.jobs;
      cfg.lsbms_threshold = o.threshold;
      if (!o.methods.empty()) {
        cfg.methods.clear();
        for (const auto& m : o.methods) cfg.methods.push_back(require_method(m));
      }
      if (!o.rates.empty()) cfg.rates = o.rates;
      if (!o.detectors.empty()) {
        cfg.detectors.clear();
        for (const auto& d : o.detectors) cfg.detectors.push_back(*parse_detector(d));
      }
      if (o.kind != "transform" && o.covers.empty()) {
        throw Error(Errc::InvalidArgument, "--covers is required for the " + o.kind + " bench");
      }
      std::string csv;
      if (o.kind == "transform") {
        csv = run_transform_stats(cfg);
      } else if (o.kind == "detector") {
        csv = run_detector_bench(cfg);
      } else {
        csv = run_embedding_bench(cfg);
      }
      write_file(o.out, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()), csv.size()));
      say(fmt::format("bench,{},{}", o.kind, o.out));
    }
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code(error_class(e.code()));
  }
  return 0;
}

}  // namespace simstego
