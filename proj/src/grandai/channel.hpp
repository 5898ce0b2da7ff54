#pragma once
#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "modem.hpp"
#include "rng.hpp"

namespace grandai {

// Causal FIR channel with J taps per output symbol:
//   y_k = sum_{j=0}^{J-1} tap(k,j) * x_{k-j} + w_k.
// Taps may vary per output symbol; if fewer rows than symbols are supplied the
// rows repeat cyclically.
struct TapChannel {
  std::vector<std::vector<cxd>> rows;  // each row length J

  int J() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  const std::vector<cxd>& row(int k) const { return rows[static_cast<size_t>(k) % rows.size()]; }
  cxd tap(int k, int j) const { return row(k)[j]; }

  // Scale all taps so the mean row energy sum_j |h_j|^2 is 1.
  void normalize_mean_energy();
};

TapChannel dicode_taps(double rho);  // taps (1, -rho), one shared row

// AR(2) tap profile: per row, z_0 and z_1 are unit complex Gaussians and
// z_j = phi1 z_{j-1} + phi2 z_{j-2} for j >= 2.
TapChannel ar2_taps(uint64_t seed, int n_rows, int J, cxd phi1, cxd phi2);

// Dense lower-banded matrix form, entry (k, k-j) = tap(k, j).
Eigen::MatrixXcd build_channel_matrix(const TapChannel& ch, int n_s);

// Pass symbols through the channel and add white CN(0, sigma2_w) noise.
std::vector<cxd> transmit(const TapChannel& ch, const std::vector<cxd>& x, double sigma2_w, Rng& rng);

// Stationary first-order Gauss-Markov covariance, entry (i,k) = sigma2*rho^|i-k|.
Eigen::MatrixXcd gm1_covariance(double rho, double sigma2, int n);

// Second-order model: lag-0 sigma2, lag-1 rho1*sigma2, lag-2 rho2*sigma2, then
// gamma_i = beta1 gamma_{i-1} + beta2 gamma_{i-2} with the Yule-Walker
// coefficients. Rejects parameters outside the valid region.
Eigen::MatrixXcd ar2_covariance(double rho1, double rho2, double sigma2, int n);

void ar2_yw_coeffs(double rho1, double rho2, double& beta1, double& beta2);
bool ar2_params_valid(double rho1, double rho2);

// Stationary colored-noise sample paths matching the covariances above.
std::vector<cxd> gen_colored_noise_gm1(double rho, double sigma2, int n, Rng& rng);
std::vector<cxd> gen_colored_noise_ar2(double rho1, double rho2, double sigma2, int n, Rng& rng);

}  // namespace grandai
