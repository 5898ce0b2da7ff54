#pragma once

namespace grandai {

// All rates are per-sample differential entropy rates in nats.

// First-order Gauss-Markov process, circularly-symmetric complex convention:
//   (1/n) log det(pi e C) with C_ik = sigma2 rho^|i-k|
// = log(2 e pi sigma2) ... for rho=0; the correlated rate subtracts the
// redundancy (1 - 1/n) log(1/(1-rho^2)).
double gm1_entropy_rate(double rho, double sigma2, int n);

// Same process observed per length-b block: only within-block correlation is
// exploitable, so the redundancy multiplier becomes (1 - 1/b).
double gm1_block_entropy_rate(double rho, double sigma2, int b);

// White complex Gaussian rate at the same per-sample power.
double white_entropy_rate(double sigma2);

// Second-order model, real-valued convention:
//   (1/2) log(2 pi e sigma2) + (1/(2n)) log(det / sigma2^n).
double ar2_entropy_rate(double rho1, double rho2, double sigma2, int n);
double white_entropy_rate_real(double sigma2);

// Closed-form determinant of the n x n second-order covariance (n >= 4):
//   -(rho2-1)^(n-2) (1-2 rho1^2+rho2)^(n-2) sigma2^n / (rho1^2-1)^(n-3).
double ar2_determinant_closed_form(double rho1, double rho2, double sigma2, int n);

}  // namespace grandai
