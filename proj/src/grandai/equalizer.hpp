#pragma once
#include <Eigen/Dense>
#include <vector>

#include "channel.hpp"

namespace grandai {

// Zero-forcing over the two-tap channel (1, -rho): x~_k = y_k + rho x~_{k-1}.
std::vector<cxd> zf_equalize_dicode(const std::vector<cxd>& y, double rho);

// General zero-forcing for a causal banded channel: forward substitution of
// h x = y (requires nonzero leading taps).
std::vector<cxd> zf_equalize(const TapChannel& ch, const std::vector<cxd>& y);

// Linear MMSE equalizer for y = h x + n with x ~ (0, Cx), n ~ (0, Cn):
//   h_eq = Cx h^H (h Cx h^H + Cn)^{-1}.
Eigen::MatrixXcd mmse_matrix(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& Cx, const Eigen::MatrixXcd& Cn);

// Covariance of the residual h_eq y - x:
//   h_eq h Cx h^H h_eq^H + h_eq Cn h_eq^H - h_eq h Cx - Cx h^H h_eq^H + Cx.
Eigen::MatrixXcd equalized_noise_covariance(const Eigen::MatrixXcd& h_eq, const Eigen::MatrixXcd& h,
                                            const Eigen::MatrixXcd& Cx, const Eigen::MatrixXcd& Cn);

// b x b sub-block of the residual covariance for block i, with the symbols of
// block i held fixed (their prior variance zeroed); Cx is taken as identity
// elsewhere.
Eigen::MatrixXcd block_conditional_covariance(const Eigen::MatrixXcd& h_eq, const Eigen::MatrixXcd& h,
                                              const Eigen::MatrixXcd& Cn, int block, int b);

// All n_s/b per-block residual covariance sub-blocks at once (marginal or
// conditional form), sharing the heavy matrix products.
std::vector<Eigen::MatrixXcd> mmse_block_covariances(const Eigen::MatrixXcd& h_eq, const Eigen::MatrixXcd& h,
                                                     const Eigen::MatrixXcd& Cn, int b, bool conditional);

// Diagonal b x b blocks of h_eq * h: the effective within-block channel that
// linear equalization leaves behind. Paired with the conditional covariances,
// they complete the block residual model
//   y_block - (h_eq h)_ii x_block ~ N(0, C_i),
// whose noise term (cross-block interference plus filtered channel noise) is
// independent of the block's own symbols. The marginal covariances instead
// fold the within-block interference into the noise and pair with an identity
// coupling.
std::vector<Eigen::MatrixXcd> mmse_block_couplings(const Eigen::MatrixXcd& h_eq, const Eigen::MatrixXcd& h,
                                                   int b);

// Believed residual blocks for zero-forcing with (estimated) taps `est` over
// white noise of variance sigma2_w: blocks of sigma2_w * inv(H) inv(H)^H.
std::vector<Eigen::MatrixXcd> zf_noise_block_covariances(const TapChannel& est, double sigma2_w, int n_s, int b);

}  // namespace grandai
