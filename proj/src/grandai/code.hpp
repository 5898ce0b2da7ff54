#pragma once
#include <cstdint>
#include <vector>

#include "error.hpp"

namespace grandai {

using Bits = std::vector<uint8_t>;  // one bit per element, values 0/1

// Row-major bit matrix packed 64 bits per word.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(static_cast<size_t>(rows) * wpr_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return wpr_; }
  int get(int r, int c) const { return static_cast<int>((row(r)[c >> 6] >> (c & 63)) & 1u); }
  void set(int r, int c, int v) {
    uint64_t m = 1ull << (c & 63);
    if (v)
      row(r)[c >> 6] |= m;
    else
      row(r)[c >> 6] &= ~m;
  }
  const uint64_t* row(int r) const { return w_.data() + static_cast<size_t>(r) * wpr_; }
  uint64_t* row(int r) { return w_.data() + static_cast<size_t>(r) * wpr_; }

 private:
  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> w_;
};

// Systematic binary linear block code: G = [I_k | P], H = [P^T | I_{n-k}].
struct LinearCode {
  int n = 0, k = 0;
  BitMatrix G;  // k x n
  BitMatrix H;  // (n-k) x n
  int syn_words = 0;
  std::vector<uint64_t> colsyn;  // column c's syndrome H[:,c], syn_words words each

  int redundancy() const { return n - k; }
  double rate() const { return static_cast<double>(k) / n; }

  Bits encode(const Bits& info) const;
  // XOR column c's syndrome into acc (acc holds syn_words words).
  void xor_col_syndrome(int c, uint64_t* acc) const {
    const uint64_t* p = colsyn.data() + static_cast<size_t>(c) * syn_words;
    for (int w = 0; w < syn_words; ++w) acc[w] ^= p[w];
  }
  void syndrome(const Bits& word, uint64_t* out) const;
  bool is_member(const Bits& word) const;
};

// Random linear code: P bits drawn row-major from a counter-based stream keyed
// by `seed` (row r draws its words in order), so the code is a pure function
// of (n, k, seed).
LinearCode make_random_linear_code(int n, int k, uint64_t seed);

// Systematic code with an explicit k x (n-k) parity block P.
LinearCode make_code_from_parity(const BitMatrix& P);

// CRC code in systematic form. `poly_koopman` encodes the generator polynomial
// with the trailing +1 implicit and the leading term as the top set bit:
// g(x) = (value << 1 | 1) read as coefficients, degree = bit length of value.
// Codeword = [message | parity], parity = remainder of m(x)*x^d mod g(x),
// message and parity both most-significant-coefficient first.
LinearCode make_crc_code(int k, uint64_t poly_koopman);

int crc_degree(uint64_t poly_koopman);

}  // namespace grandai
