#include "code.hpp"

#include <algorithm>

#include "rng.hpp"

namespace grandai {

Bits LinearCode::encode(const Bits& info) const {
  if (static_cast<int>(info.size()) != k) fail_config("encode: info length != k");
  int wpr = G.words_per_row();
  std::vector<uint64_t> acc(wpr, 0);
  for (int i = 0; i < k; ++i) {
    if (info[i]) {
      const uint64_t* r = G.row(i);
      for (int w = 0; w < wpr; ++w) acc[w] ^= r[w];
    }
  }
  Bits out(n);
  for (int c = 0; c < n; ++c) out[c] = static_cast<uint8_t>((acc[c >> 6] >> (c & 63)) & 1u);
  return out;
}

void LinearCode::syndrome(const Bits& word, uint64_t* out) const {
  if (static_cast<int>(word.size()) != n) fail_config("syndrome: word length != n");
  for (int w = 0; w < syn_words; ++w) out[w] = 0;
  for (int c = 0; c < n; ++c)
    if (word[c]) xor_col_syndrome(c, out);
}

bool LinearCode::is_member(const Bits& word) const {
  std::vector<uint64_t> s(syn_words, 0);
  syndrome(word, s.data());
  for (uint64_t w : s)
    if (w) return false;
  return true;
}

namespace {

void finalize_from_parity(LinearCode& code, const BitMatrix& P) {
  int n = code.n, k = code.k, r = n - k;
  code.G = BitMatrix(k, n);
  for (int i = 0; i < k; ++i) {
    code.G.set(i, i, 1);
    for (int j = 0; j < r; ++j) code.G.set(i, k + j, P.get(i, j));
  }
  code.H = BitMatrix(r, n);
  for (int t = 0; t < r; ++t) {
    for (int i = 0; i < k; ++i) code.H.set(t, i, P.get(i, t));
    code.H.set(t, k + t, 1);
  }
  code.syn_words = (r + 63) / 64;
  code.colsyn.assign(static_cast<size_t>(n) * code.syn_words, 0);
  for (int c = 0; c < n; ++c) {
    uint64_t* col = code.colsyn.data() + static_cast<size_t>(c) * code.syn_words;
    for (int t = 0; t < r; ++t)
      if (code.H.get(t, c)) col[t >> 6] |= 1ull << (t & 63);
  }
}

}  // namespace

LinearCode make_code_from_parity(const BitMatrix& P) {
  if (P.rows() <= 0 || P.cols() <= 0) fail_config("parity block must be non-empty");
  LinearCode code;
  code.k = P.rows();
  code.n = P.rows() + P.cols();
  finalize_from_parity(code, P);
  return code;
}

LinearCode make_random_linear_code(int n, int k, uint64_t seed) {
  if (n <= 0 || k <= 0 || k >= n) fail_config("random linear code requires 0 < k < n");
  LinearCode code;
  code.n = n;
  code.k = k;
  int r = n - k;
  int words = (r + 63) / 64;
  BitMatrix P(k, r);
  Rng rng(seed);
  for (int i = 0; i < k; ++i) {
    for (int w = 0; w < words; ++w) {
      uint64_t bits = rng.next_u64();
      int base = w * 64;
      int top = std::min(64, r - base);
      for (int b = 0; b < top; ++b) P.set(i, base + b, static_cast<int>((bits >> b) & 1u));
    }
  }
  finalize_from_parity(code, P);
  return code;
}

int crc_degree(uint64_t poly_koopman) {
  if (poly_koopman == 0) fail_config("CRC polynomial must be nonzero");
  int d = 0;
  while (poly_koopman >> d) ++d;
  return d;
}

LinearCode make_crc_code(int k, uint64_t poly_koopman) {
  int d = crc_degree(poly_koopman);
  if (d < 1 || d > 62) fail_config("CRC degree out of range");
  if (k <= 0) fail_config("CRC code requires k > 0");
  uint64_t full = (poly_koopman << 1) | 1ull;  // explicit x^d .. 1
  // rem[e] = x^(d+e) mod g, as coefficients of x^(d-1)..x^0 in bits d-1..0
  std::vector<uint64_t> rems(k);
  uint64_t rem = full ^ (1ull << d);  // x^d mod g
  for (int e = 0; e < k; ++e) {
    rems[e] = rem;
    rem <<= 1;
    if (rem & (1ull << d)) rem ^= full;
    rem &= (1ull << d) - 1;
  }
  LinearCode code;
  code.n = k + d;
  code.k = k;
  BitMatrix P(k, d);
  for (int i = 0; i < k; ++i) {
    uint64_t ri = rems[k - 1 - i];  // info bit i carries x^(k-1-i)
    for (int j = 0; j < d; ++j) P.set(i, j, static_cast<int>((ri >> (d - 1 - j)) & 1u));
  }
  finalize_from_parity(code, P);
  return code;
}

}  // namespace grandai
