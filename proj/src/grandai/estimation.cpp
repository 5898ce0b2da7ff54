#include "estimation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace grandai {

TapChannel perturb_taps_nmse(const TapChannel& ch, double nmse, Rng& rng) {
  if (nmse < 0.0) fail_config("nmse must be >= 0");
  TapChannel out = ch;
  for (auto& row : out.rows)
    for (cxd& t : row) t *= cxd(1.0, 0.0) + rng.cgauss(nmse);
  return out;
}

double mismatch_rho(double rho, double delta) {
  double r = rho + delta;
  return std::clamp(r, -0.999, 0.999);
}

std::pair<cxd, cxd> ar2_fit_taps(const std::vector<cxd>& taps) {
  int J = static_cast<int>(taps.size());
  if (J < 4) fail_config("ar2 fit requires at least 4 taps");
  int rows = J - 2;
  Eigen::MatrixXcd A(rows, 2);
  Eigen::VectorXcd t(rows);
  for (int j = 2; j < J; ++j) {
    A(j - 2, 0) = taps[j - 1];
    A(j - 2, 1) = taps[j - 2];
    t(j - 2) = taps[j];
  }
  Eigen::MatrixXcd N = A.adjoint() * A;
  cxd det = N(0, 0) * N(1, 1) - N(0, 1) * N(1, 0);
  if (std::abs(det) < 1e-30) fail_numeric("ar2 fit: singular normal equations");
  Eigen::VectorXcd rhs = A.adjoint() * t;
  cxd phi1 = (N(1, 1) * rhs(0) - N(0, 1) * rhs(1)) / det;
  cxd phi2 = (N(0, 0) * rhs(1) - N(1, 0) * rhs(0)) / det;
  return {phi1, phi2};
}

std::vector<cxd> ar2_extrapolate(cxd z0, cxd z1, cxd phi1, cxd phi2, int J) {
  if (J < 2) fail_config("extrapolation requires J >= 2");
  std::vector<cxd> out(J);
  out[0] = z0;
  out[1] = z1;
  for (int j = 2; j < J; ++j) out[j] = phi1 * out[j - 1] + phi2 * out[j - 2];
  return out;
}

TapChannel ar2_fit_channel(const TapChannel& ch) {
  TapChannel out = ch;
  for (auto& row : out.rows) {
    auto [phi1, phi2] = ar2_fit_taps(row);
    row = ar2_extrapolate(row[0], row[1], phi1, phi2, static_cast<int>(row.size()));
  }
  return out;
}

TapChannel quantize_taps(const TapChannel& ch, int q) {
  if (q < 2) fail_config("quantization requires at least 2 levels");
  double remin = std::numeric_limits<double>::infinity(), remax = -remin;
  double immin = remin, immax = -remin;
  for (const auto& row : ch.rows)
    for (cxd t : row) {
      remin = std::min(remin, t.real());
      remax = std::max(remax, t.real());
      immin = std::min(immin, t.imag());
      immax = std::max(immax, t.imag());
    }
  auto quant = [q](double v, double lo, double hi) {
    if (hi <= lo) return lo;  // degenerate span: single level
    double step = (hi - lo) / (q - 1);
    // nearest level, exact midpoints rounding toward the lower level
    double u = (v - lo) / step;
    double idx = std::ceil(u - 0.5);
    idx = std::clamp(idx, 0.0, static_cast<double>(q - 1));
    return lo + idx * step;
  };
  TapChannel out = ch;
  for (auto& row : out.rows)
    for (cxd& t : row) t = cxd(quant(t.real(), remin, remax), quant(t.imag(), immin, immax));
  return out;
}

}  // namespace grandai
