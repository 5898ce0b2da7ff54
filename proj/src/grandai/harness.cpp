#include "harness.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "equalizer.hpp"
#include "error.hpp"
#include "estimation.hpp"
#include "io.hpp"
#include "orbgrand_ai.hpp"
#include "sounding.hpp"

namespace grandai {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

SimConfig SimConfig::from_text(const std::string& text) {
  SimConfig cfg;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail_config("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) fail_config("config line " + std::to_string(lineno) + ": empty key");
    cfg.kv_[key] = val;
  }
  return cfg;
}

SimConfig SimConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_io("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

void SimConfig::set(const std::string& key, const std::string& value) { kv_[trim(key)] = trim(value); }

std::string SimConfig::get_str(const std::string& key, const std::string& def) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? def : it->second;
}

std::string SimConfig::require_str(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) fail_config("missing config key: " + key);
  return it->second;
}

double SimConfig::get_num(const std::string& key, double def) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  try {
    size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    fail_config("config key " + key + ": not a number: " + it->second);
  }
}

double SimConfig::require_num(const std::string& key) const {
  if (!has(key)) fail_config("missing config key: " + key);
  return get_num(key, 0.0);
}

long long SimConfig::get_int(const std::string& key, long long def) const {
  double v = get_num(key, static_cast<double>(def));
  long long i = static_cast<long long>(v);
  if (static_cast<double>(i) != v) fail_config("config key " + key + ": expected an integer");
  return i;
}

uint64_t SimConfig::get_u64(const std::string& key, uint64_t def) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  try {
    size_t pos = 0;
    uint64_t v = std::stoull(it->second, &pos, 0);  // base 0: accepts 0x... too
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    fail_config("config key " + key + ": not an unsigned integer: " + it->second);
  }
}

double ebn0_to_sigma2(double ebn0_db, double rate, int bits_per_symbol) {
  if (rate <= 0.0 || bits_per_symbol <= 0) fail_config("ebn0 mapping requires positive rate and bits/symbol");
  return 1.0 / (rate * bits_per_symbol * std::pow(10.0, ebn0_db / 10.0));
}

std::vector<double> parse_ebn0_grid(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) fail_config("empty ebn0 grid");
  std::vector<double> out;
  if (t.find(':') != std::string::npos) {
    double a, s, b;
    char c1, c2;
    std::istringstream ss(t);
    if (!(ss >> a >> c1 >> s >> c2 >> b) || c1 != ':' || c2 != ':') fail_config("ebn0 grid: want a:step:b");
    if (s <= 0.0) fail_config("ebn0 grid: step must be positive");
    if (b < a - 1e-12) fail_config("ebn0 grid: end before start");
    long n = static_cast<long>(std::floor((b - a) / s + 1e-9)) + 1;
    for (long i = 0; i < n; ++i) out.push_back(a + i * s);
  } else {
    std::istringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      out.push_back(std::stod(item));
    }
  }
  if (out.empty()) fail_config("empty ebn0 grid");
  return out;
}

WilsonCi wilson_ci_95(uint64_t errors, uint64_t frames) {
  if (frames == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  double n = static_cast<double>(frames);
  double p = static_cast<double>(errors) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double PointResult::query_se() const {
  if (frames < 2) return 0.0;
  double n = static_cast<double>(frames);
  double mean = static_cast<double>(queries_sum) / n;
  double var = static_cast<double>(queries_sq_sum) / n - mean * mean;
  if (var < 0.0) var = 0.0;
  return std::sqrt(var / n);
}

int env_worker_count() {
  if (const char* e = std::getenv("GRANDAI_WORKERS")) {
    int v = std::atoi(e);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// ---------------------------------------------------------------------------
// sweep execution

namespace {

constexpr uint64_t kBatch = 256;
enum : uint64_t { kPurposeData = 1, kPurposeNoise = 2, kPurposeCsi = 3 };

uint64_t frame_key(uint64_t master, uint64_t point, uint64_t frame, uint64_t purpose) {
  return rng_derive(rng_derive(rng_derive(master, point), frame), purpose);
}

struct FrameOut {
  bool error = false;
  bool failure = false;
  uint64_t queries = 0;
  uint64_t patterns = 0;
};

enum class DecoderKind { ai, interleaved, hard };
enum class PipelineKind { zf, mmse };
enum class CsiKind { perfect, nmse, delta_rho, ar2_fit, quantize };

struct PointSetup {
  const LinearCode* code = nullptr;
  const Constellation* cst = nullptr;
  int n_s = 0, b = 1, gamma = 2;
  uint64_t tau = kNoBudget;
  DecoderKind decoder = DecoderKind::ai;
  PipelineKind pipeline = PipelineKind::zf;
  CsiKind csi = CsiKind::perfect;
  bool conditional = true;
  bool dicode = false;
  double rho = 0.0;
  double sigma2_n = 0.0;  // decoder-side noise power (post-eq for dicode)
  double sigma2_w = 0.0;  // white variance injected at the channel
  double nmse = 0.0;
  const TapChannel* true_taps = nullptr;
  TapChannel est_taps;                   // fixed-CSI estimate
  Eigen::MatrixXcd h_eq;                 // mmse pipeline, fixed CSI
  std::vector<Eigen::MatrixXcd> blocks;  // decoder covariances, fixed CSI
  uint64_t master = 0;
  uint64_t point_idx = 0;
};

struct WorkerCtx {
  std::optional<AiDecoder> dec;  // usable when CSI is fixed per point
  Bits info;
  std::vector<cxd> x, y, yeq;
};

int effective_b(const PointSetup& ps) { return ps.decoder == DecoderKind::interleaved ? 1 : ps.b; }

std::vector<Eigen::MatrixXcd> decoder_blocks_for(const PointSetup& ps, const TapChannel& est,
                                                 const Eigen::MatrixXcd* h_eq_est) {
  int b = effective_b(ps);
  bool conditional = ps.conditional && ps.decoder == DecoderKind::ai;
  if (ps.pipeline == PipelineKind::zf) {
    if (ps.csi == CsiKind::perfect && ps.dicode)
      return {gm1_covariance(ps.rho, ps.sigma2_n, b)};
    if (ps.csi == CsiKind::delta_rho)
      return {gm1_covariance(ps.rho, ps.sigma2_n, b)};  // rho already mismatched upstream
    return zf_noise_block_covariances(est, ps.sigma2_w, ps.n_s, b);
  }
  // mmse: believed residual statistics from the estimated channel
  Eigen::MatrixXcd hh = build_channel_matrix(est, ps.n_s);
  Eigen::MatrixXcd Cn = ps.sigma2_w * Eigen::MatrixXcd::Identity(ps.n_s, ps.n_s);
  return mmse_block_covariances(*h_eq_est, hh, Cn, b, conditional);
}

FrameOut run_frame(const PointSetup& ps, WorkerCtx& w, uint64_t f) {
  const LinearCode& code = *ps.code;
  const Constellation& cst = *ps.cst;
  Rng rd(frame_key(ps.master, ps.point_idx, f, kPurposeData));
  w.info.resize(code.k);
  for (int i = 0; i < code.k; ++i) w.info[i] = static_cast<uint8_t>(rd.bit());
  Bits cw = code.encode(w.info);
  w.x = cst.modulate(cw);

  Rng rn(frame_key(ps.master, ps.point_idx, f, kPurposeNoise));
  w.y = transmit(*ps.true_taps, w.x, ps.sigma2_w, rn);

  FrameOut out;
  auto finish = [&](const AiResult& r) {
    out.queries = r.queries;
    out.patterns = r.patterns;
    out.failure = !r.found;
    out.error = !r.found || r.codeword != cw;
  };

  if (ps.csi == CsiKind::nmse) {
    Rng rc(frame_key(ps.master, ps.point_idx, f, kPurposeCsi));
    TapChannel est = perturb_taps_nmse(*ps.true_taps, ps.nmse, rc);
    if (ps.pipeline == PipelineKind::zf) {
      w.yeq = zf_equalize(est, w.y);
      auto blocks = decoder_blocks_for(ps, est, nullptr);
      AiDecoder dec(code, cst, effective_b(ps), ps.gamma, ps.tau, blocks);
      finish(dec.decode(w.yeq));
    } else {
      Eigen::MatrixXcd hh = build_channel_matrix(est, ps.n_s);
      Eigen::MatrixXcd Cn = ps.sigma2_w * Eigen::MatrixXcd::Identity(ps.n_s, ps.n_s);
      Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(ps.n_s, ps.n_s);
      Eigen::MatrixXcd heq = mmse_matrix(hh, I, Cn);
      Eigen::Map<const Eigen::VectorXcd> yv(w.y.data(), ps.n_s);
      Eigen::VectorXcd z = heq * yv;
      w.yeq.assign(z.data(), z.data() + ps.n_s);
      auto blocks = mmse_block_covariances(heq, hh, Cn, effective_b(ps),
                                           ps.conditional && ps.decoder == DecoderKind::ai);
      AiDecoder dec(code, cst, effective_b(ps), ps.gamma, ps.tau, blocks);
      finish(dec.decode(w.yeq));
    }
    return out;
  }

  // fixed CSI
  if (ps.pipeline == PipelineKind::zf) {
    w.yeq = zf_equalize(ps.est_taps, w.y);
  } else {
    Eigen::Map<const Eigen::VectorXcd> yv(w.y.data(), ps.n_s);
    Eigen::VectorXcd z = ps.h_eq * yv;
    w.yeq.assign(z.data(), z.data() + ps.n_s);
  }

  if (ps.decoder == DecoderKind::hard) {
    Bits hard = cst.demodulate_hard(w.yeq);
    BitDecodeResult r = hard_grand_decode(hard, code, ps.tau);
    out.queries = r.stats.queries;
    out.patterns = r.stats.patterns;
    out.failure = !r.stats.found;
    out.error = !r.stats.found || r.codeword != cw;
    return out;
  }
  finish(w.dec->decode(w.yeq));
  return out;
}

struct Batch {
  uint64_t frames = 0, errors = 0, failures = 0, queries = 0, patterns = 0, qsq = 0;
};

PointResult run_point(const PointSetup& ps, uint64_t min_errors, uint64_t max_frames, int workers) {
  uint64_t n_batches = (max_frames + kBatch - 1) / kBatch;
  std::mutex mu;
  std::condition_variable cv;
  std::map<uint64_t, Batch> done;
  std::exception_ptr err;
  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> limit{n_batches};

  auto work = [&]() {
    try {
      WorkerCtx w;
      if (ps.csi != CsiKind::nmse && ps.decoder != DecoderKind::hard)
        w.dec.emplace(*ps.code, *ps.cst, effective_b(ps), ps.gamma, ps.tau, ps.blocks);
      while (true) {
        uint64_t idx = next.fetch_add(1);
        if (idx >= limit.load(std::memory_order_acquire)) break;
        Batch b;
        uint64_t f0 = idx * kBatch;
        uint64_t f1 = std::min(f0 + kBatch, max_frames);
        for (uint64_t f = f0; f < f1; ++f) {
          FrameOut o = run_frame(ps, w, f);
          ++b.frames;
          b.errors += o.error;
          b.failures += o.failure;
          b.queries += o.queries;
          b.patterns += o.patterns;
          b.qsq += o.queries * o.queries;
        }
        {
          std::lock_guard<std::mutex> lk(mu);
          done.emplace(idx, b);
        }
        cv.notify_all();
      }
    } catch (...) {
      {
        std::lock_guard<std::mutex> lk(mu);
        if (!err) err = std::current_exception();
        limit.store(0);
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);

  PointResult acc;
  {
    std::unique_lock<std::mutex> lk(mu);
    uint64_t commit = 0;
    while (commit < n_batches) {
      cv.wait(lk, [&] { return err || done.count(commit) != 0; });
      if (err) break;
      const Batch& b = done[commit];
      acc.frames += b.frames;
      acc.errors += b.errors;
      acc.failures += b.failures;
      acc.queries_sum += b.queries;
      acc.patterns_sum += b.patterns;
      acc.queries_sq_sum += b.qsq;
      done.erase(commit);
      ++commit;
      if (acc.errors >= min_errors || acc.frames >= max_frames) {
        limit.store(commit, std::memory_order_release);
        break;
      }
    }
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return acc;
}

}  // namespace

namespace {

// first present key wins; `def` if none is set
std::string pick_str(const SimConfig& cfg, std::initializer_list<const char*> keys, const std::string& def) {
  for (const char* k : keys)
    if (cfg.has(k)) return cfg.get_str(k, def);
  return def;
}

bool truthy(const std::string& v) { return v == "1" || v == "true" || v == "yes" || v == "on"; }

}  // namespace

SweepResult run_sweep(const SimConfig& cfg, int workers) {
  if (workers <= 0) workers = env_worker_count();

  // --- code ---
  std::string ctype = cfg.get_str("code.type", "rlc");
  LinearCode code;
  if (ctype == "rlc") {
    code = make_random_linear_code(static_cast<int>(cfg.get_int("code.n", 0)),
                                   static_cast<int>(cfg.get_int("code.k", 0)), cfg.get_u64("code.seed", 1));
  } else if (ctype == "crc") {
    code = make_crc_code(static_cast<int>(cfg.get_int("code.k", 0)), cfg.get_u64("code.poly", 0));
  } else {
    fail_config("unknown code.type: " + ctype);
  }

  Constellation cst = Constellation::make(pick_str(cfg, {"mod", "modulation"}, "bpsk"));
  if (code.n % cst.bits_per_symbol() != 0) fail_config("code length not a multiple of bits per symbol");
  int n_s = code.n / cst.bits_per_symbol();

  // --- channel (one realization per sweep) ---
  std::string chtype = pick_str(cfg, {"channel.type", "channel"}, "dicode");
  TapChannel taps;
  bool dicode = false;
  double rho = 0.0;
  if (chtype == "dicode") {
    dicode = true;
    rho = cfg.get_num("channel.rho", 0.5);
    if (!(rho > -1.0 && rho < 1.0)) fail_config("channel.rho must lie in (-1,1)");
    taps = dicode_taps(rho);
  } else if (chtype == "synthetic") {
    int m = static_cast<int>(cfg.get_int("channel.m", 250));
    int mu = static_cast<int>(cfg.get_int("channel.mu", 32));
    int L = static_cast<int>(cfg.get_int("channel.L", 50));
    double sparsity = cfg.get_num("channel.sparsity", 0.5);
    double decay = cfg.get_num("channel.decay", 0.6);
    ImpulseResponse ir = make_synthetic_impulse_response(cfg.get_u64("channel.seed", 7), m, mu, sparsity, decay);
    taps = extract_taps(ir, L, cfg.get_num("channel.fs", 1.0e7));
    taps.normalize_mean_energy();
  } else if (chtype == "synthetic_ar2") {
    int J = static_cast<int>(cfg.get_int("channel.J", 6));
    int rows = static_cast<int>(cfg.get_int("channel.rows", n_s));
    cxd phi1(cfg.get_num("channel.phi1", 0.5), 0.0);
    cxd phi2(cfg.get_num("channel.phi2", 0.2), 0.0);
    taps = ar2_taps(cfg.get_u64("channel.seed", 7), rows, J, phi1, phi2);
    taps.normalize_mean_energy();
  } else if (chtype == "taps_csv") {
    taps = read_taps_csv(cfg.require_str("channel.file"));
  } else {
    fail_config("unknown channel.type: " + chtype);
  }

  // --- pipeline / decoder / csi selection ---
  std::string eq = pick_str(cfg, {"eq", "equalizer"}, dicode ? "zf" : "mmse");
  PipelineKind pipeline;
  if (eq == "zf")
    pipeline = PipelineKind::zf;
  else if (eq == "mmse")
    pipeline = PipelineKind::mmse;
  else
    fail_config("unknown eq: " + eq);

  std::string dstr = cfg.get_str("decoder", "orbgrand_ai");
  DecoderKind dk;
  if (dstr == "orbgrand_ai")
    dk = DecoderKind::ai;
  else if (dstr == "interleaved" || dstr == "orbgrand_interleaved")
    dk = DecoderKind::interleaved;
  else if (dstr == "hard_grand" || dstr == "hard")
    dk = DecoderKind::hard;
  else
    fail_config("unknown decoder: " + dstr);

  std::string cstr = cfg.get_str("csi", "perfect");
  if (!cfg.has("csi") && cfg.has("csi.ar2_fit") && truthy(cfg.get_str("csi.ar2_fit", "")))
    cstr = "ar2_fit";  // boolean spelling selects the fitted-channel mode
  CsiKind ck;
  if (cstr == "perfect")
    ck = CsiKind::perfect;
  else if (cstr == "nmse")
    ck = CsiKind::nmse;
  else if (cstr == "delta_rho")
    ck = CsiKind::delta_rho;
  else if (cstr == "ar2_fit")
    ck = CsiKind::ar2_fit;
  else if (cstr == "quantize")
    ck = CsiKind::quantize;
  else
    fail_config("unknown csi: " + cstr);
  if (ck == CsiKind::delta_rho && !dicode) fail_config("csi=delta_rho requires the dicode channel");

  int b = static_cast<int>(cfg.get_int("decoder.b", 1));
  int gamma = static_cast<int>(cfg.get_int("decoder.gamma", 2));
  uint64_t tau = cfg.get_u64("decoder.tau", 100000);
  if (tau == 0) tau = kNoBudget;
  bool conditional = cfg.get_str("decoder.cov", "conditional") == "conditional";

  uint64_t master = cfg.get_u64("seed", 1);
  uint64_t min_errors = cfg.get_u64("stop.errors", 100);
  uint64_t max_frames = cfg.get_u64("stop.frames", 1000000);
  if (max_frames == 0) fail_config("stop.frames must be positive");
  std::vector<double> grid = parse_ebn0_grid(cfg.get_str("ebn0", "0:1:6"));

  SweepResult result;
  for (size_t pi = 0; pi < grid.size(); ++pi) {
    PointSetup ps;
    ps.code = &code;
    ps.cst = &cst;
    ps.n_s = n_s;
    ps.b = b;
    ps.gamma = gamma;
    ps.tau = tau;
    ps.decoder = dk;
    ps.pipeline = pipeline;
    ps.csi = ck;
    ps.conditional = conditional;
    ps.dicode = dicode;
    ps.rho = rho;
    ps.master = master;
    ps.point_idx = pi;
    ps.true_taps = &taps;
    ps.nmse = cfg.get_num("csi.nmse", 0.1);

    double sigma2 = ebn0_to_sigma2(grid[pi], code.rate(), cst.bits_per_symbol());
    ps.sigma2_n = sigma2;
    ps.sigma2_w = dicode && pipeline == PipelineKind::zf ? (1.0 - rho * rho) * sigma2 : sigma2;

    // fixed channel estimate
    switch (ck) {
      case CsiKind::perfect:
      case CsiKind::nmse:
        ps.est_taps = taps;
        break;
      case CsiKind::delta_rho: {
        ps.est_taps = taps;  // equalization keeps the true taps
        ps.rho = mismatch_rho(rho, cfg.get_num("csi.delta_rho", 0.0));
        break;
      }
      case CsiKind::ar2_fit:
        ps.est_taps = ar2_fit_channel(taps);
        break;
      case CsiKind::quantize:
        ps.est_taps = quantize_taps(taps, static_cast<int>(cfg.get_int("csi.quantize_levels", 25)));
        break;
    }

    if (ck != CsiKind::nmse) {
      if (pipeline == PipelineKind::mmse) {
        Eigen::MatrixXcd hh = build_channel_matrix(ps.est_taps, n_s);
        Eigen::MatrixXcd Cn = ps.sigma2_w * Eigen::MatrixXcd::Identity(n_s, n_s);
        Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n_s, n_s);
        ps.h_eq = mmse_matrix(hh, I, Cn);
        if (dk != DecoderKind::hard) ps.blocks = decoder_blocks_for(ps, ps.est_taps, &ps.h_eq);
      } else if (dk != DecoderKind::hard) {
        ps.blocks = decoder_blocks_for(ps, ps.est_taps, nullptr);
      }
    }

    PointResult pr = run_point(ps, min_errors, max_frames, workers);
    pr.ebn0_db = grid[pi];
    result.points.push_back(pr);
  }

  // resolved configuration for the sidecar
  auto& rv = result.resolved;
  rv = cfg.entries();
  rv["code.type"] = ctype;
  rv["code.n"] = std::to_string(code.n);
  rv["code.k"] = std::to_string(code.k);
  rv["mod"] = cst.name();
  rv["channel.type"] = chtype;
  if (dicode) rv["channel.rho"] = std::to_string(rho);
  rv["eq"] = eq;
  rv["decoder"] = dk == DecoderKind::ai ? "orbgrand_ai" : dk == DecoderKind::interleaved ? "interleaved" : "hard_grand";
  rv["decoder.b"] = std::to_string(b);
  rv["decoder.gamma"] = std::to_string(gamma);
  rv["decoder.tau"] = tau == kNoBudget ? "0" : std::to_string(tau);
  rv["decoder.cov"] = conditional ? "conditional" : "marginal";
  rv["csi"] = cstr;
  rv["seed"] = std::to_string(master);
  rv["stop.errors"] = std::to_string(min_errors);
  rv["stop.frames"] = std::to_string(max_frames);
  return result;
}

void write_sweep_csv(const SweepResult& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail_io("cannot write " + path);
  out << "ebn0_db,frames,errors,bler,ci_lo,ci_hi,mean_queries,failures\n";
  char buf[256];
  for (const auto& p : r.points) {
    WilsonCi ci = wilson_ci_95(p.errors, p.frames);
    std::snprintf(buf, sizeof buf, "%.12g,%llu,%llu,%.12g,%.12g,%.12g,%.12g,%llu\n", p.ebn0_db,
                  static_cast<unsigned long long>(p.frames), static_cast<unsigned long long>(p.errors), p.bler(),
                  ci.lo, ci.hi, p.mean_queries(), static_cast<unsigned long long>(p.failures));
    out << buf;
  }
  if (!out) fail_io("write failed: " + path);
  std::ofstream meta(path + ".meta");
  if (!meta) fail_io("cannot write " + path + ".meta");
  for (const auto& [k, v] : r.resolved) meta << k << " = " << v << "\n";
  for (size_t i = 0; i < r.points.size(); ++i) {
    std::snprintf(buf, sizeof buf, "point.%zu.mean_patterns = %.12g\n", i, r.points[i].mean_patterns());
    meta << buf;
  }
  if (!meta) fail_io("write failed: " + path + ".meta");
}

}  // namespace grandai
