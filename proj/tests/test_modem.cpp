#include "grandai/modem.hpp"

#include <cmath>
#include <complex>

#include "grandai/error.hpp"
#include "grandai/rng.hpp"
#include "testing.hpp"

using namespace grandai;

TEST_CASE(bpsk_points) {
  Constellation c = Constellation::make("bpsk");
  CHECK_EQ(c.bits_per_symbol(), 1);
  CHECK_EQ(c.size(), 2);
  CHECK_NEAR(std::abs(c.point(0) - cxd(1.0, 0.0)), 0.0, 1e-15);
  CHECK_NEAR(std::abs(c.point(1) - cxd(-1.0, 0.0)), 0.0, 1e-15);
}

TEST_CASE(qam_unit_energy) {
  for (const char* name : {"bpsk", "qam16", "qam256"}) {
    Constellation c = Constellation::make(name);
    double e = 0.0;
    for (int s = 0; s < c.size(); ++s) e += std::norm(c.point(s));
    CHECK_NEAR(e / c.size(), 1.0, 1e-12);
  }
}

TEST_CASE(qam16_grid_levels) {
  Constellation c = Constellation::make("qam16");
  double s = 1.0 / std::sqrt(10.0);
  // every point's coordinates are odd multiples of 1/sqrt(10)
  for (int l = 0; l < 16; ++l) {
    double re = c.point(l).real() / s, im = c.point(l).imag() / s;
    CHECK_NEAR(std::fabs(std::fabs(re) - 2.0), 1.0, 1e-9);  // |re| in {1,3}
    CHECK_NEAR(std::fabs(std::fabs(im) - 2.0), 1.0, 1e-9);
  }
}

TEST_CASE(qam_gray_adjacency) {
  // stepping one grid level along either axis changes exactly one label bit
  for (const char* name : {"qam16", "qam256"}) {
    Constellation c = Constellation::make(name);
    int h = c.bits_per_symbol() / 2;
    int side = 1 << h;
    auto gray = [](int v) { return v ^ (v >> 1); };
    for (int li = 0; li + 1 < side; ++li) {
      int d = gray(li) ^ gray(li + 1);
      CHECK_EQ(d & (d - 1), 0);  // power of two: single bit
      CHECK(d != 0);
    }
  }
}

TEST_CASE(hard_label_round_trip) {
  Rng rng(3);
  for (const char* name : {"bpsk", "qam16", "qam256"}) {
    Constellation c = Constellation::make(name);
    for (int l = 0; l < c.size(); ++l) {
      cxd y = c.point(l) + 1e-4 * rng.cgauss(1.0);
      CHECK_EQ(static_cast<int>(c.hard_label(y)), l);
    }
  }
}

TEST_CASE(nearest_points_to_received_sample) {
  Constellation b = Constellation::make("bpsk");
  auto nb = b.nearest(cxd(0.9, 0.0), 2);
  CHECK_EQ(nb.size(), size_t(2));
  CHECK_EQ(nb[0], 0u);  // +1 is closer
  CHECK_EQ(nb[1], 1u);

  Constellation c = Constellation::make("qam16");
  // sample exactly on a corner point: the corner first, then its two
  // grid-adjacent points (equidistant, resolved by lowest label)
  double s = 1.0 / std::sqrt(10.0);
  uint32_t corner = c.hard_label(cxd(3 * s, 3 * s));
  auto n3 = c.nearest(cxd(3 * s, 3 * s), 3);
  CHECK_EQ(n3[0], corner);
  CHECK_NEAR(std::norm(c.point(n3[1]) - c.point(corner)), 4.0 / 10.0, 1e-9);
  CHECK_NEAR(std::norm(c.point(n3[2]) - c.point(corner)), 4.0 / 10.0, 1e-9);
  CHECK(n3[1] < n3[2]);

  // the set follows the received sample, not the hard decision: a sample near
  // an inner point but pulled off-centre ranks the pull directions first
  cxd y(1.4 * s, 1.1 * s);
  auto lab = [&](double re, double im) { return c.hard_label(cxd(re * s, im * s)); };
  auto n4 = c.nearest(y, 4);
  CHECK_EQ(n4[0], lab(1, 1));
  CHECK_EQ(n4[1], lab(3, 1));
  CHECK_EQ(n4[2], lab(1, 3));
  CHECK_EQ(n4[3], lab(1, -1));

  // gamma = constellation size returns every point
  auto all = c.nearest(y, c.size());
  CHECK_EQ(all.size(), size_t(16));
  uint32_t mask = 0;
  for (uint32_t l : all) mask |= 1u << l;
  CHECK_EQ(mask, 0xffffu);

  // invariants on random samples: size gamma, hard decision first, distances
  // non-decreasing, entries distinct
  Rng rng(17);
  Constellation q = Constellation::make("qam256");
  for (int t = 0; t < 50; ++t) {
    cxd v = rng.cgauss(1.2);
    auto r = q.nearest(v, 9);
    CHECK_EQ(r.size(), size_t(9));
    CHECK_EQ(r[0], q.hard_label(v));
    for (size_t i = 1; i < r.size(); ++i) {
      CHECK(std::norm(v - q.point(r[i - 1])) <= std::norm(v - q.point(r[i])) + 1e-12);
      for (size_t j = 0; j < i; ++j) CHECK(r[i] != r[j]);
    }
  }

  CHECK_THROWS_KIND(c.nearest(y, 0), Error);
  CHECK_THROWS_KIND(c.nearest(y, 17), Error);
}

TEST_CASE(modulate_bits_msb_first) {
  Constellation c = Constellation::make("qam16");
  Bits bits = {0, 0, 0, 1, 1, 0, 1, 0};  // labels 1 and 10
  auto labels = c.labels_of_bits(bits);
  CHECK_EQ(static_cast<int>(labels.size()), 2);
  CHECK_EQ(static_cast<int>(labels[0]), 1);
  CHECK_EQ(static_cast<int>(labels[1]), 10);
  Bits back(bits.size());
  for (size_t s = 0; s < labels.size(); ++s) c.label_to_bits(labels[s], back.data() + 4 * s);
  CHECK(back == bits);
  auto x = c.modulate(bits);
  CHECK_NEAR(std::abs(x[0] - c.point(1)), 0.0, 1e-15);
  CHECK_NEAR(std::abs(x[1] - c.point(10)), 0.0, 1e-15);
}

TEST_CASE(demodulate_hard_clean) {
  Rng rng(8);
  for (const char* name : {"bpsk", "qam16", "qam256"}) {
    Constellation c = Constellation::make(name);
    Bits bits(4 * c.bits_per_symbol());
    for (auto& b : bits) b = static_cast<uint8_t>(rng.bit());
    auto x = c.modulate(bits);
    Bits back = c.demodulate_hard(x);
    CHECK(back == bits);
  }
}

TEST_CASE(constellation_validation) {
  CHECK_THROWS_KIND(Constellation::make("qam64"), Error);
  Constellation c = Constellation::make("qam16");
  CHECK_THROWS_KIND(c.modulate(Bits(3)), Error);  // not a multiple of 4 bits
}

int main(int argc, char** argv) { return testing::run_all(argc, argv); }
