#include "simstego/bench.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

#include "simstego/baselines.hpp"
#include "simstego/error.hpp"
#include "simstego/iwsim.hpp"
#include "simstego/metrics.hpp"
#include "simstego/prng.hpp"
#include "simstego/sim.hpp"

namespace simstego {

namespace {

struct CorpusEntry {
  std::string name;
  GrayImage image;
  std::string error;  // empty when the file loaded
};

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(Errc::Io, "not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".pgm") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    CorpusEntry entry{f.filename().string(), {}, {}};
    try {
      entry.image = read_pgm_file(f);
    } catch (const Error& e) {
      entry.error = errc_name(e.code());
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<const CorpusEntry*> loaded(const std::vector<CorpusEntry>& corpus) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus) {
    if (e.error.empty()) out.push_back(&e);
  }
  return out;
}

std::string num(double v, int precision = 6) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.{}f}", v, precision);
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
  unsigned workers = jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : jobs;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run, t);
  run(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

BitStream raw_bits(const GrayImage& secret, std::size_t n_bits) {
  BitStream out;
  const std::size_t total = secret.size() * 8;
  for (std::size_t k = 0; k < n_bits; ++k) {
    const std::size_t i = k % total;
    out.push_bit((secret[i / 8] >> (7 - i % 8)) & 1U);
  }
  return out;
}

double binary_zero_ratio(const GrayImage& img) { return zero_lsb_ratio(Scheme::binary(), img); }

std::size_t method_index(Method m) {
  return static_cast<std::size_t>(std::find(kAllMethods.begin(), kAllMethods.end(), m) -
                                  kAllMethods.begin());
}

}  // namespace

void validate(const BenchConfig& cfg) {
  if (cfg.methods.empty()) throw Error(Errc::InvalidArgument, "bench needs at least one method");
  for (double r : cfg.rates) {
    if (!(r > 0.0 && r <= 1.0)) throw Error(Errc::InvalidArgument, "rates must lie in (0, 1]");
  }
  if (cfg.rates.empty()) throw Error(Errc::InvalidArgument, "bench needs at least one rate");
  for (const auto& dir : {cfg.cover_dir, cfg.secret_dir}) {
    if (!dir.empty() && !std::filesystem::is_directory(dir)) {
      throw Error(Errc::Io, "not a directory: " + dir.string());
    }
  }
}

RateEmbedding embed_at_rate(const GrayImage& cover, const GrayImage& secret, Method method,
                            double rate, std::uint64_t key) {
  RateEmbedding out;
  if (is_mapping(method)) {
    const auto& table = MappingTable::for_scheme(method_scheme(method).kind());
    const auto parts = payload_parts(secret, method);
    const std::size_t gross = cover.size() - 1;
    if (parts.fixed_bits() > gross) throw CapacityError(parts.fixed_bits(), gross);
    const auto target = static_cast<std::size_t>(std::floor(rate * static_cast<double>(gross)));
    out.complete = parts.total_bits() <= target;
    out.payload = out.complete ? parts.full() : parts.truncated(target);
    auto embedded = embed_bits(cover, out.payload, table, key);
    out.r0_cover = embedded.form.use_complement ? embedded.form.r_comp : embedded.form.r;
    out.stego = std::move(embedded.stego);
    if (out.complete) {
      out.round_trip_ok = extract(out.stego, {method, key}) == secret;
    } else {
      out.round_trip_ok = extract_bits(out.stego, table, key, out.payload.size()) == out.payload;
    }
    return out;
  }
  const std::size_t cap = capacity_bits(method, cover);
  auto target = static_cast<std::size_t>(std::floor(rate * static_cast<double>(cap)));
  if (method == Method::Lsbmr) target -= target % 2;
  out.payload = raw_bits(secret, target);
  out.complete = secret.size() * 8 <= target;
  out.r0_cover = binary_zero_ratio(cover);
  BitStream back;
  switch (method) {
    case Method::Lsbr:
      out.stego = lsbr_embed(cover, out.payload, key);
      back = lsbr_extract(out.stego, target, key);
      break;
    case Method::Lsbm:
      out.stego = lsbm_embed(cover, out.payload, key);
      back = lsbm_extract(out.stego, target, key);
      break;
    default:
      out.stego = lsbmr_embed(cover, out.payload, key);
      back = lsbmr_extract(out.stego, target, key);
      break;
  }
  out.round_trip_ok = back == out.payload;
  return out;
}

std::string run_transform_stats(const BenchConfig& cfg) {
  const auto corpus = load_corpus(cfg.secret_dir);
  if (corpus.empty()) throw Error(Errc::Io, "no PGM files in " + cfg.secret_dir.string());
  static constexpr std::array<std::string_view, 3> kTransforms = {"none", "sim", "iwsim"};
  struct Row {
    double before, after;
    std::size_t side_info, payload;
  };
  std::vector<std::array<Row, 3>> rows(corpus.size());
  parallel_for(corpus.size(), cfg.jobs, [&](std::size_t i) {
    if (!corpus[i].error.empty()) return;
    const auto& img = corpus[i].image;
    const auto gain = sim_zero_gain(img);
    const auto sim = sim_forward(img);
    const auto iw = iwsim_encode(img);
    BitStream codes;
    for (const auto& b : iw.blocks) codes.append(b.codes);
    rows[i][0] = {gain.before, gain.before, 0, img.size() * 8};
    rows[i][1] = {gain.before, gain.after, sim.side_info.size(), sim.payload.size()};
    rows[i][2] = {gain.before, codes.zero_ratio(), iw.side_info_bits(), codes.size()};
  });

  std::string out = fmt::format("{}\n", kTransformSchema);
  out += "row_type,file,transform,height,width,zero_before,zero_after,side_info_bits,payload_bits,status\n";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& e = corpus[i];
    if (!e.error.empty()) {
      out += fmt::format("warning,{},,,,,,,,error:{}\n", e.name, e.error);
      continue;
    }
    for (std::size_t t = 0; t < kTransforms.size(); ++t) {
      const auto& r = rows[i][t];
      out += fmt::format("image,{},{},{},{},{},{},{},{},ok\n", e.name, kTransforms[t],
                         e.image.height(), e.image.width(), num(r.before), num(r.after),
                         r.side_info, r.payload);
    }
  }
  const auto ok = loaded(corpus);
  if (ok.empty()) return out;
  for (std::size_t t = 0; t < kTransforms.size(); ++t) {
    std::vector<std::array<double, 3>> vals;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!corpus[i].error.empty()) continue;
      const auto& r = rows[i][t];
      vals.push_back({r.before, r.after, static_cast<double>(r.side_info)});
    }
    const double n = static_cast<double>(vals.size());
    std::array<double, 3> mean{}, sd{}, lo, hi;
    lo.fill(kInfinity);
    hi.fill(-kInfinity);
    for (const auto& v : vals) {
      for (int k = 0; k < 3; ++k) {
        mean[k] += v[k] / n;
        lo[k] = std::min(lo[k], v[k]);
        hi[k] = std::max(hi[k], v[k]);
      }
    }
    for (const auto& v : vals) {
      for (int k = 0; k < 3; ++k) sd[k] += (v[k] - mean[k]) * (v[k] - mean[k]) / n;
    }
    for (auto& s : sd) s = std::sqrt(s);
    const std::array<std::pair<std::string_view, std::array<double, 3>>, 4> stats = {
        {{"mean", mean}, {"std", sd}, {"min", lo}, {"max", hi}}};
    for (const auto& [label, v] : stats) {
      out += fmt::format("{},,{},,,{},{},{},,ok\n", label, kTransforms[t], num(v[0]), num(v[1]),
                         num(v[2], 2));
    }
  }
  return out;
}

std::string run_embedding_bench(const BenchConfig& cfg) {
  validate(cfg);
  const auto covers = load_corpus(cfg.cover_dir);
  const auto secrets = load_corpus(cfg.secret_dir);
  struct Task {
    std::size_t c, s, m, r;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < covers.size(); ++c) {
    if (!covers[c].error.empty()) continue;
    for (std::size_t s = 0; s < secrets.size(); ++s) {
      if (!secrets[s].error.empty()) continue;
      for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
        for (std::size_t r = 0; r < cfg.rates.size(); ++r) tasks.push_back({c, s, m, r});
      }
    }
  }
  std::vector<std::string> lines(tasks.size());
  parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
    const auto& t = tasks[i];
    const auto& cover = covers[t.c].image;
    const auto& secret = secrets[t.s].image;
    const Method method = cfg.methods[t.m];
    const double rate = cfg.rates[t.r];
    const auto key = derive_key(cfg.seed, t.c, t.s, (method_index(method) << 8) | t.r);
    const std::string prefix =
        fmt::format("{},{},{},{},{},{},{}", covers[t.c].name, secrets[t.s].name, secret.height(),
                    secret.width(), method_name(method), num(rate, 2), num(capacity(method, cover)));
    try {
      const auto e = embed_at_rate(cover, secret, method, rate, key);
      const auto changed = modified_pixels(cover, e.stego);
      const double bits = static_cast<double>(e.payload.size());
      const double r0 = e.payload.empty() ? std::nan("") : e.payload.zero_ratio();
      const double predicted =
          method == Method::Lsbmr ? std::nan("") : expected_change_prob(r0, e.r0_cover);
      lines[i] = fmt::format(
          "{},{},{},{},{},{},{},{},{},{},{},ok\n", prefix, e.payload.size(), e.complete ? 1 : 0,
          changed, num(bits > 0 ? static_cast<double>(changed) / bits : std::nan("")),
          num(e.payload.empty() ? std::nan("") : embedding_efficiency(cover, e.stego, e.payload.size())),
          num(psnr(cover, e.stego)), num(r0), num(e.r0_cover), num(predicted),
          e.round_trip_ok ? 1 : 0);
    } catch (const Error& err) {
      lines[i] = fmt::format("{},,,,,,,,,,,error:{}\n", prefix, errc_name(err.code()));
    }
  });
  std::string out = fmt::format("{}\n", kEmbeddingSchema);
  out +=
      "cover,secret,secret_height,secret_width,method,rate,capacity,payload_bits,complete,"
      "modified_pixels,modified_fraction,ee,psnr_db,r0_payload,r0_cover,predicted_change,"
      "round_trip_ok,status\n";
  for (const auto& e : covers) {
    if (!e.error.empty()) out += fmt::format("{},,,,,,,,,,,,,,,,,error:{}\n", e.name, e.error);
  }
  for (const auto& e : secrets) {
    if (!e.error.empty()) out += fmt::format(",{},,,,,,,,,,,,,,,,error:{}\n", e.name, e.error);
  }
  for (const auto& l : lines) out += l;
  return out;
}

std::string run_detector_bench(const BenchConfig& cfg) {
  validate(cfg);
  if (cfg.detectors.empty()) throw Error(Errc::InvalidArgument, "bench needs at least one detector");
  const auto covers = load_corpus(cfg.cover_dir);
  const auto secrets = load_corpus(cfg.secret_dir);
  const auto secret_list = loaded(secrets);
  if (secret_list.empty()) throw Error(Errc::Io, "no readable secret in " + cfg.secret_dir.string());
  // Every stego carries the first secret; rate 0 rows are the untouched covers.
  const GrayImage& secret = secret_list.front()->image;

  struct Task {
    std::size_t c;
    std::optional<std::size_t> m;
    std::size_t r;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < covers.size(); ++c) {
    if (!covers[c].error.empty()) continue;
    tasks.push_back({c, std::nullopt, 0});
    for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
      for (std::size_t r = 0; r < cfg.rates.size(); ++r) tasks.push_back({c, m, r});
    }
  }
  struct Result {
    std::vector<DetectorReport> reports;
    std::string error;
  };
  std::vector<Result> results(tasks.size());
  parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
    const auto& t = tasks[i];
    const auto& cover = covers[t.c].image;
    try {
      GrayImage img = cover;
      if (t.m) {
        const Method method = cfg.methods[*t.m];
        const auto key = derive_key(cfg.seed, t.c, 0, (method_index(method) << 8) | t.r);
        img = embed_at_rate(cover, secret, method, cfg.rates[t.r], key).stego;
      }
      for (auto d : cfg.detectors) results[i].reports.push_back(analyze(img, d, cfg.lsbms_threshold));
    } catch (const Error& err) {
      results[i].error = errc_name(err.code());
    }
  });

  auto method_label = [&](const Task& t) {
    return t.m ? std::string(method_name(cfg.methods[*t.m])) : std::string("cover");
  };
  auto rate_value = [&](const Task& t) { return t.m ? cfg.rates[t.r] : 0.0; };
  auto detected = [&](const DetectorReport& rep) {
    if (rep.verdict) return *rep.verdict == Verdict::Stego;
    return !rep.no_estimate && rep.estimate > cfg.rate_threshold;
  };

  std::string out = fmt::format("{}\n", kDetectorSchema);
  out += "row_type,cover,method,rate,detector,estimate,verdict,variant,detected_fraction,count,status\n";
  struct Agg {
    double sum = 0.0;
    std::size_t valid = 0, hits = 0, count = 0;
  };
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Agg> agg;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const auto& res = results[i];
    const std::string head = fmt::format("image,{},{},{}", covers[t.c].name, method_label(t),
                                         num(rate_value(t), 2));
    if (!res.error.empty()) {
      out += fmt::format("{},,,,,,,error:{}\n", head, res.error);
      continue;
    }
    for (std::size_t d = 0; d < res.reports.size(); ++d) {
      const auto& rep = res.reports[d];
      const char* verdict = rep.verdict ? (*rep.verdict == Verdict::Stego ? "stego" : "cover") : "";
      out += fmt::format("{},{},{},{},{},,,{}\n", head, detector_name(rep.detector), num(rep.estimate),
                         verdict, rep.variant, rep.no_estimate ? "no-estimate" : "ok");
      auto& a = agg[{t.m ? *t.m + 1 : 0, t.m ? t.r : 0, d}];
      ++a.count;
      if (!rep.no_estimate) {
        a.sum += rep.estimate;
        ++a.valid;
      }
      a.hits += detected(rep) ? 1 : 0;
    }
  }
  for (const auto& [k, a] : agg) {
    const auto [m, r, d] = k;
    const std::string method = m == 0 ? "cover" : std::string(method_name(cfg.methods[m - 1]));
    const double rate = m == 0 ? 0.0 : cfg.rates[r];
    out += fmt::format("aggregate,,{},{},{},{},,,{},{},ok\n", method, num(rate, 2),
                       detector_name(cfg.detectors[d]),
                       num(a.valid ? a.sum / static_cast<double>(a.valid) : std::nan("")),
                       num(static_cast<double>(a.hits) / static_cast<double>(a.count)), a.count);
  }
  return out;
}

}  // namespace simstego
