#include "grandai/analysis.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "grandai/channel.hpp"
#include "grandai/error.hpp"
#include "grandai/rng.hpp"
#include "testing.hpp"

using namespace grandai;

namespace {

double logdet_real(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXd r = m.real();
  Eigen::LLT<Eigen::MatrixXd> llt(r);
  double ld = 0.0;
  for (int i = 0; i < r.rows(); ++i) ld += std::log(llt.matrixL()(i, i));
  return 2.0 * ld;
}

}  // namespace

TEST_CASE(white_rate_formula) {
  const double pi = std::acos(-1.0), e = std::exp(1.0);
  for (double s2 : {0.5, 1.0, 2.3}) {
    CHECK_NEAR(white_entropy_rate(s2), std::log(2.0 * e * pi * s2), 1e-14);
    CHECK_NEAR(white_entropy_rate_real(s2), 0.5 * std::log(2.0 * pi * e * s2), 1e-14);
  }
}

TEST_CASE(gm1_rate_matches_numeric_logdet) {
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    double rho = 0.1 + 0.8 * rng.uniform();
    double s2 = 0.5 + 1.5 * rng.uniform();
    int n = 4 + static_cast<int>(rng.uniform() * 60);
    double numeric = std::log(2.0 * std::exp(1.0) * std::acos(-1.0)) +
                     logdet_real(gm1_covariance(rho, s2, n)) / n;
    double rel = std::fabs(gm1_entropy_rate(rho, s2, n) - numeric) / std::fabs(numeric);
    CHECK(rel < 1e-9);
  }
}

TEST_CASE(gm1_block_rate_relation) {
  // rate with independent length-b blocks interpolates between white (b=1)
  // and the fully correlated limit; b=2 sits exactly halfway
  double rho = 0.75, s2 = 1.0;
  double white = white_entropy_rate(s2);
  double full = white + std::log(1.0 - rho * rho);
  CHECK_NEAR(gm1_block_entropy_rate(rho, s2, 1), white, 1e-12);
  CHECK_NEAR(gm1_block_entropy_rate(rho, s2, 2), 0.5 * (white + full), 1e-12);
  double prev = white;
  for (int b = 2; b <= 16; b *= 2) {
    double r = gm1_block_entropy_rate(rho, s2, b);
    CHECK(r < prev);  // more modelled correlation, lower entropy
    CHECK(r > full);
    prev = r;
  }
}

TEST_CASE(ar2_determinant_matches_numeric) {
  Rng rng(9);
  int done = 0;
  while (done < 60) {
    double r1 = -0.55 + 1.1 * rng.uniform();
    double lo = 2.0 * r1 * r1 - 1.0 + 0.2;
    double r2 = lo + (0.75 - lo) * rng.uniform();
    if (!ar2_params_valid(r1, r2)) continue;
    double s2 = 0.5 + 1.5 * rng.uniform();
    int n = 4 + static_cast<int>(rng.uniform() * 13);
    Eigen::MatrixXd cov = ar2_covariance(r1, r2, s2, n).real();
    double numeric = cov.fullPivLu().determinant();
    double closed = ar2_determinant_closed_form(r1, r2, s2, n);
    CHECK(closed > 0.0);
    CHECK(std::fabs(closed - numeric) / std::fabs(numeric) < 1e-9);
    ++done;
  }
}

TEST_CASE(ar2_rate_matches_numeric_logdet) {
  double r1 = 0.5, r2 = 0.25, s2 = 1.3;
  for (int n : {4, 8, 16, 32}) {
    double ld = logdet_real(ar2_covariance(r1, r2, s2, n));
    double numeric = white_entropy_rate_real(s2) + 0.5 * (ld - n * std::log(s2)) / n;
    CHECK_NEAR(ar2_entropy_rate(r1, r2, s2, n), numeric, 1e-9);
  }
}

TEST_CASE(ar2_rate_below_white) {
  // correlation strictly reduces entropy rate
  double r = ar2_entropy_rate(0.5, 0.25, 1.0, 32);
  CHECK(r < white_entropy_rate_real(1.0));
}

TEST_CASE(analysis_validation) {
  CHECK_THROWS_KIND(white_entropy_rate(0.0), Error);
  CHECK_THROWS_KIND(gm1_entropy_rate(1.0, 1.0, 8), Error);
  CHECK_THROWS_KIND(ar2_determinant_closed_form(0.5, 0.25, 1.0, 3), Error);   // needs n >= 4
  CHECK_THROWS_KIND(ar2_determinant_closed_form(0.9, -0.5, 1.0, 8), Error);  // invalid params
}

int main(int argc, char** argv) { return testing::run_all(argc, argv); }
