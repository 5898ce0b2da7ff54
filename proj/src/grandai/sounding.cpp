#include "sounding.hpp"

#include <cmath>

#include "error.hpp"
#include "rng.hpp"

namespace grandai {

ImpulseResponse make_synthetic_impulse_response(uint64_t seed, int m, int mu, double sparsity, double decay) {
  if (m <= 0 || mu <= 0) fail_config("impulse response requires m > 0 and mu > 0");
  if (sparsity < 0.0 || sparsity > 1.0) fail_config("sparsity must lie in [0,1]");
  if (decay < 0.0 || decay >= 1.0) fail_config("decay must lie in [0,1)");
  ImpulseResponse ir;
  ir.m = m;
  ir.mu = mu;
  ir.g = Eigen::MatrixXcd::Zero(m, mu);
  Rng rng(seed);
  for (int r = 0; r < mu; ++r) {
    ir.g(0, r) = rng.cgauss(1.0);
    for (int s = 1; s < m; ++s) {
      bool occupied = rng.uniform() < sparsity;
      cxd v = rng.cgauss(1.0);  // always drawn: keeps the stream layout fixed
      if (occupied && decay > 0.0) ir.g(s, r) = v * std::pow(decay, s);
    }
  }
  return ir;
}

TapChannel extract_taps(const ImpulseResponse& ir, int L, double f_s, int soundings_per_pulse) {
  if (L < 2 || L > ir.m) fail_config("extract_taps requires 2 <= L <= m");
  if (f_s <= 0.0) fail_config("extract_taps requires f_s > 0");
  if (soundings_per_pulse <= 0) fail_config("soundings_per_pulse must be positive");
  const int m = ir.m;
  const long eta = sounding_filtered_length(m, L);
  const int J = sounding_tap_count(m, L);
  if (J < 1) fail_numeric("sounding geometry yields no taps");

  // single-cycle probe tone, unit energy
  std::vector<cxd> u(L);
  const double a = 1.0 / std::sqrt(static_cast<double>(L));
  for (int l = 1; l <= L; ++l) {
    double ph = 2.0 * M_PI * l / L;
    u[l - 1] = a * cxd(std::cos(ph), std::sin(ph));
  }

  TapChannel ch;
  ch.rows.reserve(static_cast<size_t>(ir.mu) * soundings_per_pulse);
  std::vector<cxd> z(m + L - 1);
  std::vector<cxd> zp(eta);
  for (int r = 0; r < ir.mu; ++r) {
    std::fill(z.begin(), z.end(), cxd(0.0, 0.0));
    for (int i = 0; i < m; ++i) {
      cxd gi = ir.g(i, r);
      if (gi == cxd(0.0, 0.0)) continue;
      for (int l = 0; l < L; ++l) z[i + l] += gi * u[l];
    }
    // matched filter: convolve with time-reversed conjugate probe
    std::fill(zp.begin(), zp.end(), cxd(0.0, 0.0));
    for (size_t i = 0; i < z.size(); ++i) {
      cxd zi = z[i];
      if (zi == cxd(0.0, 0.0)) continue;
      for (int l = 0; l < L; ++l) zp[i + l] += zi * std::conj(u[L - 1 - l]);
    }
    // symbol-spaced samples anchored at the zero-delay correlation peak.
    // 1-based sample position q = (L+2) + j*L lives at 0-based index q-1.
    std::vector<cxd> taps(J, cxd(0.0, 0.0));
    for (int j = 0; j < J; ++j) {
      long q = (L + 2) + static_cast<long>(j) * L;
      if (q <= eta) taps[j] = zp[q - 1];
    }
    for (int s = 0; s < soundings_per_pulse; ++s) ch.rows.push_back(taps);
  }
  return ch;
}

TapChannel extract_taps(const ImpulseResponse& ir, int L, double f_s) {
  return extract_taps(ir, L, f_s, std::max(1, ir.m / L));
}

}  // namespace grandai
