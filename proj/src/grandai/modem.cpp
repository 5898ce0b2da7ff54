#include "modem.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace grandai {

namespace {

// Reflected Gray code of a level index.
uint32_t gray(uint32_t v) { return v ^ (v >> 1); }

// Square QAM with 2^(2h) points: per-axis levels 2L-(2^h-1) for L=0..2^h-1,
// Gray-labelled per axis, normalized to unit average energy.
void build_square_qam(int h, std::vector<cxd>& pts) {
  int levels = 1 << h;
  double ms = 0.0;  // per-axis mean square of raw levels
  for (int L = 0; L < levels; ++L) {
    double v = 2.0 * L - (levels - 1);
    ms += v * v;
  }
  ms /= levels;
  double norm = std::sqrt(2.0 * ms);
  pts.assign(1ull << (2 * h), cxd{});
  for (int Li = 0; Li < levels; ++Li) {
    for (int Lq = 0; Lq < levels; ++Lq) {
      uint32_t label = (gray(static_cast<uint32_t>(Li)) << h) | gray(static_cast<uint32_t>(Lq));
      double re = (2.0 * Li - (levels - 1)) / norm;
      double im = (2.0 * Lq - (levels - 1)) / norm;
      pts[label] = cxd(re, im);
    }
  }
}

}  // namespace

Constellation Constellation::make(const std::string& name) {
  Constellation c;
  c.name_ = name;
  if (name == "bpsk") {
    c.m_ = 1;
    c.points_ = {cxd(1.0, 0.0), cxd(-1.0, 0.0)};
  } else if (name == "qam16") {
    c.m_ = 4;
    build_square_qam(2, c.points_);
  } else if (name == "qam256") {
    c.m_ = 8;
    build_square_qam(4, c.points_);
  } else {
    fail_config("unknown constellation: " + name);
  }
  return c;
}

void Constellation::nearest_into(cxd y, int gamma, uint32_t* out) const {
  int M = size();
  if (gamma < 1 || gamma > M) fail_config("gamma must be between 1 and the constellation size");
  static thread_local std::vector<double> dist;
  static thread_local std::vector<uint32_t> order;
  dist.resize(static_cast<size_t>(M));
  order.resize(static_cast<size_t>(M));
  for (int t = 0; t < M; ++t) {
    dist[static_cast<size_t>(t)] = std::norm(y - points_[static_cast<size_t>(t)]);
    order[static_cast<size_t>(t)] = static_cast<uint32_t>(t);
  }
  std::partial_sort(order.begin(), order.begin() + gamma, order.end(), [&](uint32_t a, uint32_t b) {
    double da = dist[a], db = dist[b];
    if (da != db) return da < db;
    return a < b;
  });
  std::copy(order.begin(), order.begin() + gamma, out);
}

std::vector<uint32_t> Constellation::nearest(cxd y, int gamma) const {
  std::vector<uint32_t> r(static_cast<size_t>(std::max(gamma, 0)));
  nearest_into(y, gamma, r.data());
  return r;
}

uint32_t Constellation::hard_label(cxd y) const {
  int M = size();
  uint32_t best = 0;
  double bd = std::norm(y - points_[0]);
  for (int s = 1; s < M; ++s) {
    double d = std::norm(y - points_[s]);
    if (d < bd) {
      bd = d;
      best = static_cast<uint32_t>(s);
    }
  }
  return best;
}

std::vector<uint32_t> Constellation::labels_of_bits(const Bits& bits) const {
  if (bits.size() % m_ != 0) fail_config("bit count not a multiple of bits per symbol");
  size_t ns = bits.size() / m_;
  std::vector<uint32_t> labels(ns);
  for (size_t i = 0; i < ns; ++i) {
    uint32_t v = 0;
    for (int b = 0; b < m_; ++b) v = (v << 1) | bits[i * m_ + b];
    labels[i] = v;
  }
  return labels;
}

void Constellation::label_to_bits(uint32_t label, uint8_t* out) const {
  for (int b = 0; b < m_; ++b) out[b] = static_cast<uint8_t>((label >> (m_ - 1 - b)) & 1u);
}

std::vector<cxd> Constellation::modulate(const Bits& bits) const {
  auto labels = labels_of_bits(bits);
  std::vector<cxd> sym(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) sym[i] = points_[labels[i]];
  return sym;
}

Bits Constellation::demodulate_hard(const std::vector<cxd>& y) const {
  Bits bits(y.size() * m_);
  for (size_t i = 0; i < y.size(); ++i) label_to_bits(hard_label(y[i]), bits.data() + i * m_);
  return bits;
}

}  // namespace grandai
