#include "equalizer.hpp"

#include "error.hpp"

namespace grandai {

std::vector<cxd> zf_equalize_dicode(const std::vector<cxd>& y, double rho) {
  std::vector<cxd> x(y.size());
  cxd prev = 0.0;
  for (size_t k = 0; k < y.size(); ++k) {
    prev = y[k] + rho * prev;
    x[k] = prev;
  }
  return x;
}

std::vector<cxd> zf_equalize(const TapChannel& ch, const std::vector<cxd>& y) {
  int n = static_cast<int>(y.size());
  int J = ch.J();
  std::vector<cxd> x(n);
  for (int k = 0; k < n; ++k) {
    cxd acc = y[k];
    const auto& row = ch.row(k);
    for (int j = 1; j < J && j <= k; ++j) acc -= row[j] * x[k - j];
    if (std::abs(row[0]) < 1e-12) fail_numeric("zero-forcing: vanishing leading tap");
    x[k] = acc / row[0];
  }
  return x;
}

Eigen::MatrixXcd mmse_matrix(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& Cx, const Eigen::MatrixXcd& Cn) {
  Eigen::MatrixXcd s = h * Cx * h.adjoint() + Cn;
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(s);
  if (ldlt.info() != Eigen::Success) fail_numeric("MMSE: received covariance not factorizable");
  // h_eq = Cx h^H s^{ -1}; solve s^H z = (Cx h^H)^H instead of forming s^{-1}
  Eigen::MatrixXcd rhs = h * Cx.adjoint();
  return ldlt.solve(rhs).adjoint();
}

Eigen::MatrixXcd equalized_noise_covariance(const Eigen::MatrixXcd& h_eq, const Eigen::MatrixXcd& h,
                                            const Eigen::MatrixXcd& Cx, const Eigen::MatrixXcd& Cn) {
  Eigen::MatrixXcd a = h_eq * h;
  return a * Cx * a.adjoint() + h_eq * Cn * h_eq.adjoint() - a * Cx - Cx * a.adjoint() + Cx;
}

std::vector<Eigen::MatrixXcd> mmse_block_covariances(const Eigen::MatrixXcd& h_eq, const Eigen::MatrixXcd& h,
                                                     const Eigen::MatrixXcd& Cn, int b, bool conditional) {
  int n = static_cast<int>(h.rows());
  if (b <= 0 || n % b != 0) fail_config("block covariance requires b dividing n_s");
  // With Cx = I the residual is (A - I) x + h_eq n, A = h_eq h:
  //   C = M M^H + W,  M = A - I,  W = h_eq Cn h_eq^H.
  // Conditioning on block i zeroes the prior variance of block i's symbols,
  // removing those columns of M from the product.
  Eigen::MatrixXcd M = h_eq * h - Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd W = h_eq * Cn * h_eq.adjoint();
  Eigen::MatrixXcd G = M * M.adjoint();
  int nb = n / b;
  std::vector<Eigen::MatrixXcd> out(nb);
  for (int i = 0; i < nb; ++i) {
    int o = i * b;
    Eigen::MatrixXcd blk = G.block(o, o, b, b) + W.block(o, o, b, b);
    if (conditional) {
      Eigen::MatrixXcd Mi = M.block(o, o, b, b);  // rows of block i, columns of block i
      blk -= Mi * Mi.adjoint();
    }
    out[i] = blk;
  }
  return out;
}

std::vector<Eigen::MatrixXcd> mmse_block_couplings(const Eigen::MatrixXcd& h_eq, const Eigen::MatrixXcd& h,
                                                   int b) {
  int n = static_cast<int>(h.rows());
  if (b <= 0 || n % b != 0) fail_config("block coupling requires b dividing n_s");
  Eigen::MatrixXcd A = h_eq * h;
  int nb = n / b;
  std::vector<Eigen::MatrixXcd> out(nb);
  for (int i = 0; i < nb; ++i) out[i] = A.block(i * b, i * b, b, b);
  return out;
}

Eigen::MatrixXcd block_conditional_covariance(const Eigen::MatrixXcd& h_eq, const Eigen::MatrixXcd& h,
                                              const Eigen::MatrixXcd& Cn, int block, int b) {
  auto blocks = mmse_block_covariances(h_eq, h, Cn, b, true);
  if (block < 0 || block >= static_cast<int>(blocks.size())) fail_config("block index out of range");
  return blocks[static_cast<size_t>(block)];
}

std::vector<Eigen::MatrixXcd> zf_noise_block_covariances(const TapChannel& est, double sigma2_w, int n_s, int b) {
  if (b <= 0 || n_s % b != 0) fail_config("block covariance requires b dividing n_s");
  int J = est.J();
  // B = inv(H) for the banded lower-triangular H, forward substitution on
  // H B = I column by column
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(n_s, n_s);
  for (int r = 0; r < n_s; ++r) {
    const auto& row = est.row(r);
    if (std::abs(row[0]) < 1e-12) fail_numeric("zero-forcing covariance: vanishing leading tap");
    for (int c = 0; c <= r; ++c) {
      cxd acc = (r == c) ? cxd(1.0, 0.0) : cxd(0.0, 0.0);
      for (int j = 1; j < J && j <= r - c; ++j) acc -= row[j] * B(r - j, c);
      B(r, c) = acc / row[0];
    }
  }
  int nb = n_s / b;
  std::vector<Eigen::MatrixXcd> out(nb);
  for (int i = 0; i < nb; ++i) {
    int o = i * b;
    Eigen::MatrixXcd rows = B.block(o, 0, b, n_s);
    out[i] = sigma2_w * (rows * rows.adjoint());
  }
  return out;
}

}  // namespace grandai
