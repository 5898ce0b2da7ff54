#pragma once
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "code.hpp"

namespace grandai {

using cxd = std::complex<double>;

// Memoryless mapper with Gray-labelled square constellations, unit average
// symbol energy. Labels are integers of bits_per_symbol bits; square QAM packs
// the in-phase Gray code in the high half of the label and quadrature in the
// low half. BPSK: label 0 -> +1, label 1 -> -1.
class Constellation {
 public:
  static Constellation make(const std::string& name);  // bpsk | qam16 | qam256

  const std::string& name() const { return name_; }
  int bits_per_symbol() const { return m_; }
  int size() const { return static_cast<int>(points_.size()); }
  cxd point(uint32_t label) const { return points_[label]; }
  const std::vector<cxd>& points() const { return points_; }

  // Nearest constellation point; ties resolve to the lowest label.
  uint32_t hard_label(cxd y) const;

  // The gamma constellation points nearest (Euclidean) to a received sample,
  // sorted by increasing distance, ties broken by lowest label. The first
  // entry is therefore the hard-decision label of `y`.
  std::vector<uint32_t> nearest(cxd y, int gamma) const;
  void nearest_into(cxd y, int gamma, uint32_t* out) const;  // out: gamma labels

  // bits -> symbols, most significant label bit first within each symbol
  std::vector<cxd> modulate(const Bits& bits) const;
  // packed labels for a bit string
  std::vector<uint32_t> labels_of_bits(const Bits& bits) const;
  void label_to_bits(uint32_t label, uint8_t* out) const;  // out: m bits
  Bits demodulate_hard(const std::vector<cxd>& y) const;

 private:
  std::string name_;
  int m_ = 0;
  std::vector<cxd> points_;
};

}  // namespace grandai
