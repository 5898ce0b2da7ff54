#include "analysis.hpp"

#include <cmath>

#include "channel.hpp"
#include "error.hpp"

namespace grandai {

namespace {

constexpr double kLog2PiE = 2.8378770664093454835606594728112;  // log(2*pi*e)

double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_gm1(double rho, double sigma2) {
  if (std::abs(rho) >= 1.0) fail_config("entropy rate requires |rho| < 1");
  if (sigma2 <= 0.0) fail_config("entropy rate requires sigma2 > 0");
}

}  // namespace

double white_entropy_rate(double sigma2) {
  if (sigma2 <= 0.0) fail_config("entropy rate requires sigma2 > 0");
  return kLog2PiE + std::log(sigma2);
}

double gm1_entropy_rate(double rho, double sigma2, int n) {
  check_gm1(rho, sigma2);
  if (n < 1) fail_config("entropy rate requires n >= 1");
  return white_entropy_rate(sigma2) + (1.0 - 1.0 / n) * std::log(1.0 - rho * rho);
}

double gm1_block_entropy_rate(double rho, double sigma2, int b) {
  check_gm1(rho, sigma2);
  if (b < 1) fail_config("entropy rate requires b >= 1");
  return white_entropy_rate(sigma2) + (1.0 - 1.0 / b) * std::log(1.0 - rho * rho);
}

double white_entropy_rate_real(double sigma2) {
  if (sigma2 <= 0.0) fail_config("entropy rate requires sigma2 > 0");
  return 0.5 * (kLog2PiE + std::log(sigma2));
}

double ar2_determinant_closed_form(double rho1, double rho2, double sigma2, int n) {
  if (n < 4) fail_config("closed-form determinant requires n >= 4");
  if (sigma2 <= 0.0) fail_config("determinant requires sigma2 > 0");
  if (!ar2_params_valid(rho1, rho2)) fail_config("determinant parameters outside the valid region");
  double num = ipow(rho2 - 1.0, n - 2) * ipow(1.0 - 2.0 * rho1 * rho1 + rho2, n - 2) * ipow(sigma2, n);
  double den = ipow(rho1 * rho1 - 1.0, n - 3);
  return -num / den;
}

double ar2_entropy_rate(double rho1, double rho2, double sigma2, int n) {
  double det = ar2_determinant_closed_form(rho1, rho2, sigma2, n);
  return white_entropy_rate_real(sigma2) + (0.5 / n) * (std::log(det) - n * std::log(sigma2));
}

}  // namespace grandai
