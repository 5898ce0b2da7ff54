#include "channel.hpp"

#include <cmath>

#include "error.hpp"

namespace grandai {

void TapChannel::normalize_mean_energy() {
  if (rows.empty()) return;
  double e = 0.0;
  for (const auto& r : rows)
    for (cxd t : r) e += std::norm(t);
  e /= rows.size();
  if (e <= 0.0) fail_numeric("tap normalization: zero channel energy");
  double s = 1.0 / std::sqrt(e);
  for (auto& r : rows)
    for (cxd& t : r) t *= s;
}

TapChannel dicode_taps(double rho) {
  // the coefficient doubles as the post-equalization noise correlation, so it
  // must be a valid correlation magnitude
  if (!(rho > -1.0 && rho < 1.0)) fail_config("dicode coefficient must lie in (-1, 1)");
  TapChannel ch;
  ch.rows = {{cxd(1.0, 0.0), cxd(-rho, 0.0)}};
  return ch;
}

TapChannel ar2_taps(uint64_t seed, int n_rows, int J, cxd phi1, cxd phi2) {
  if (n_rows <= 0 || J < 2) fail_config("ar2_taps requires n_rows > 0 and J >= 2");
  TapChannel ch;
  ch.rows.resize(n_rows);
  Rng rng(seed);
  for (auto& row : ch.rows) {
    row.resize(J);
    row[0] = rng.cgauss(1.0);
    row[1] = rng.cgauss(1.0);
    for (int j = 2; j < J; ++j) row[j] = phi1 * row[j - 1] + phi2 * row[j - 2];
  }
  return ch;
}

Eigen::MatrixXcd build_channel_matrix(const TapChannel& ch, int n_s) {
  if (ch.rows.empty()) fail_config("channel has no taps");
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n_s, n_s);
  int J = ch.J();
  for (int k = 0; k < n_s; ++k)
    for (int j = 0; j < J && j <= k; ++j) h(k, k - j) = ch.tap(k, j);
  return h;
}

std::vector<cxd> transmit(const TapChannel& ch, const std::vector<cxd>& x, double sigma2_w, Rng& rng) {
  int n = static_cast<int>(x.size());
  int J = ch.J();
  std::vector<cxd> y(n);
  for (int k = 0; k < n; ++k) {
    cxd acc = 0.0;
    const auto& row = ch.row(k);
    for (int j = 0; j < J && j <= k; ++j) acc += row[j] * x[k - j];
    y[k] = acc + (sigma2_w > 0.0 ? rng.cgauss(sigma2_w) : cxd(0.0, 0.0));
  }
  return y;
}

Eigen::MatrixXcd gm1_covariance(double rho, double sigma2, int n) {
  if (std::abs(rho) >= 1.0) fail_config("gm1 covariance requires |rho| < 1");
  if (sigma2 <= 0.0 || n <= 0) fail_config("gm1 covariance requires sigma2 > 0, n > 0");
  Eigen::MatrixXcd c(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) c(i, k) = sigma2 * std::pow(rho, std::abs(i - k));
  return c;
}

void ar2_yw_coeffs(double rho1, double rho2, double& beta1, double& beta2) {
  beta1 = rho1 * (1.0 - rho2) / (1.0 - rho1 * rho1);
  beta2 = (rho2 - rho1 * rho1) / (1.0 - rho1 * rho1);
}

bool ar2_params_valid(double rho1, double rho2) {
  if (std::abs(rho1) >= 1.0 || std::abs(rho2) >= 1.0) return false;
  if (rho1 * rho1 >= 0.5 * (rho2 + 1.0)) return false;
  double t = (rho1 * rho1 + rho2 * rho2 - 2.0 * rho1 * rho1 * rho2) / (1.0 - rho1 * rho1);
  return t > 0.0 && t < 1.0;
}

Eigen::MatrixXcd ar2_covariance(double rho1, double rho2, double sigma2, int n) {
  if (sigma2 <= 0.0 || n <= 0) fail_config("ar2 covariance requires sigma2 > 0, n > 0");
  if (!ar2_params_valid(rho1, rho2)) fail_config("ar2 covariance parameters outside the valid region");
  double b1, b2;
  ar2_yw_coeffs(rho1, rho2, b1, b2);
  std::vector<double> g(std::max(n, 3));
  g[0] = sigma2;
  if (n > 1) g[1] = rho1 * sigma2;
  if (n > 2) g[2] = rho2 * sigma2;
  for (int i = 3; i < n; ++i) g[i] = b1 * g[i - 1] + b2 * g[i - 2];
  Eigen::MatrixXcd c(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) c(i, k) = g[std::abs(i - k)];
  return c;
}

std::vector<cxd> gen_colored_noise_gm1(double rho, double sigma2, int n, Rng& rng) {
  if (std::abs(rho) >= 1.0) fail_config("gm1 noise requires |rho| < 1");
  std::vector<cxd> v(n);
  if (n == 0) return v;
  v[0] = rng.cgauss(sigma2);
  double innov = sigma2 * (1.0 - rho * rho);
  for (int i = 1; i < n; ++i) v[i] = rho * v[i - 1] + rng.cgauss(innov);
  return v;
}

std::vector<cxd> gen_colored_noise_ar2(double rho1, double rho2, double sigma2, int n, Rng& rng) {
  if (!ar2_params_valid(rho1, rho2)) fail_config("ar2 noise parameters outside the valid region");
  std::vector<cxd> v(n);
  if (n == 0) return v;
  v[0] = rng.cgauss(sigma2);
  if (n == 1) return v;
  // conditional of the stationary pair: N_1 | N_0 ~ CN(rho1 N_0, (1-rho1^2) sigma2)
  v[1] = rho1 * v[0] + rng.cgauss((1.0 - rho1 * rho1) * sigma2);
  double b1, b2;
  ar2_yw_coeffs(rho1, rho2, b1, b2);
  double innov = sigma2 * (1.0 - b1 * rho1 - b2 * rho2);
  for (int i = 2; i < n; ++i) v[i] = b1 * v[i - 1] + b2 * v[i - 2] + rng.cgauss(innov);
  return v;
}

}  // namespace grandai
