#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "channel.hpp"
#include "code.hpp"
#include "modem.hpp"

namespace grandai {

// Text config: one `key = value` per line, '#' comments. Later assignments and
// CLI overrides replace earlier ones.
class SimConfig {
 public:
  static SimConfig from_file(const std::string& path);
  static SimConfig from_text(const std::string& text);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string get_str(const std::string& key, const std::string& def) const;
  std::string require_str(const std::string& key) const;
  double get_num(const std::string& key, double def) const;
  double require_num(const std::string& key) const;
  long long get_int(const std::string& key, long long def) const;
  uint64_t get_u64(const std::string& key, uint64_t def) const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

// Noise power for a spectral-efficiency-normalized Eb/N0 (unit-energy
// constellation): sigma2 = 1 / (rate * bits_per_symbol * 10^(EbN0/10)).
double ebn0_to_sigma2(double ebn0_db, double rate, int bits_per_symbol);

// "a:step:b" (inclusive) or comma-separated list.
std::vector<double> parse_ebn0_grid(const std::string& text);

struct WilsonCi {
  double lo = 0.0, hi = 1.0;
};
WilsonCi wilson_ci_95(uint64_t errors, uint64_t frames);

struct PointResult {
  double ebn0_db = 0.0;
  uint64_t frames = 0;
  uint64_t errors = 0;
  uint64_t failures = 0;  // guess budget exhausted
  uint64_t queries_sum = 0;
  uint64_t patterns_sum = 0;
  uint64_t queries_sq_sum = 0;  // for query-count confidence intervals

  double bler() const { return frames ? static_cast<double>(errors) / frames : 0.0; }
  double mean_queries() const { return frames ? static_cast<double>(queries_sum) / frames : 0.0; }
  double mean_patterns() const { return frames ? static_cast<double>(patterns_sum) / frames : 0.0; }
  double query_se() const;  // standard error of mean_queries
};

struct SweepResult {
  std::vector<PointResult> points;
  std::map<std::string, std::string> resolved;  // effective configuration
};

// Monte-Carlo block-error-rate sweep over the Eb/N0 grid. Frames are scheduled
// in fixed-size batches committed in index order, so results are bit-identical
// for any worker count. workers <= 0 reads GRANDAI_WORKERS, defaulting to the
// hardware concurrency.
SweepResult run_sweep(const SimConfig& cfg, int workers = 0);

void write_sweep_csv(const SweepResult& r, const std::string& path);

int env_worker_count();

}  // namespace grandai
