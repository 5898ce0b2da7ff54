#include "orbgrand.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace grandai {

long long logistic_weight(const std::vector<int>& ranks) {
  long long w = 0;
  for (int r : ranks) w += r;
  return w;
}

PatternGen::PatternGen(int n) : n_(n) {
  if (n < 0) fail_config("pattern generator requires n >= 0");
}

// Fill seq_[from..c_-1] with the lexicographically smallest strictly
// increasing ranks summing to `remaining`, all > prev and <= n_. The interval
// bounds below are exact, so the greedy fill succeeds iff a completion exists.
bool PatternGen::fill_min(int from, int prev, long long remaining) {
  for (int pos = from; pos < c_; ++pos) {
    long long t = c_ - 1 - pos;  // elements after this one
    long long max_tail = t * n_ - t * (t - 1) / 2;
    long long low = std::max<long long>(prev + 1, remaining - max_tail);
    long long high = std::min<long long>(n_ - t, (remaining - t * (t + 1) / 2) / (t + 1));
    if (low > high) return false;
    seq_[pos] = static_cast<int>(low);
    prev = static_cast<int>(low);
    remaining -= low;
  }
  return remaining == 0;
}

bool PatternGen::start_wc(long long W, int c) {
  seq_.assign(c, 0);
  int keep = c_;
  c_ = c;
  if (fill_min(0, 0, W)) return true;
  c_ = keep;
  return false;
}

// Lexicographic successor within fixed (weight, cardinality): raise the
// rightmost raisable position, min-fill the suffix. The last position can
// never move alone (the total is fixed).
bool PatternGen::advance_same_wc() {
  long long pre = 0;  // sum of seq_[0..pos-1]
  for (int pos = 0; pos < c_ - 1; ++pos) pre += seq_[pos];
  for (int pos = c_ - 2; pos >= 0; --pos) {
    pre -= seq_[pos];
    long long remaining = W_ - pre;  // to distribute over pos..c_-1
    long long t = c_ - 1 - pos;
    long long max_tail = t * n_ - t * (t - 1) / 2;
    long long low = std::max<long long>(seq_[pos] + 1, remaining - max_tail);
    long long high = std::min<long long>(n_ - t, (remaining - t * (t + 1) / 2) / (t + 1));
    if (low <= high) {
      seq_[pos] = static_cast<int>(low);
      if (!fill_min(pos + 1, static_cast<int>(low), remaining - low))
        fail_numeric("pattern successor: infeasible refill");
      return true;
    }
  }
  return false;
}

bool PatternGen::next() {
  if (done_) return false;
  if (c_ > 0 && advance_same_wc()) return true;
  long long wmax = static_cast<long long>(n_) * (n_ + 1) / 2;
  long long W = W_;
  int c = c_ - 1;
  while (true) {
    for (; c >= 1; --c) {
      long long minsum = static_cast<long long>(c) * (c + 1) / 2;
      long long maxsum = static_cast<long long>(c) * n_ - static_cast<long long>(c) * (c - 1) / 2;
      if (W < minsum || W > maxsum) continue;
      if (start_wc(W, c)) {
        W_ = W;
        c_ = c;
        return true;
      }
    }
    ++W;
    if (W > wmax) {
      done_ = true;
      seq_.clear();
      c_ = 0;
      return false;
    }
    c = 0;
    while (c + 1 <= n_ && static_cast<long long>(c + 1) * (c + 2) / 2 <= W) ++c;
  }
}

std::vector<std::vector<int>> pattern_sequence(int n, long long max_weight, size_t max_count) {
  std::vector<std::vector<int>> out;
  PatternGen gen(n);
  while (out.size() < max_count && gen.weight() <= max_weight) {
    out.push_back(gen.current());
    if (!gen.next()) break;
    if (gen.weight() > max_weight) break;
  }
  return out;
}

namespace {

struct SynAcc {
  std::array<uint64_t, kMaxSynWords> w{};
  void load(const uint64_t* src, int n) {
    for (int i = 0; i < n; ++i) w[i] = src[i];
  }
  bool zero(int n) const {
    uint64_t acc = 0;
    for (int i = 0; i < n; ++i) acc |= w[i];
    return acc == 0;
  }
};

}  // namespace

BitDecodeResult orbgrand_decode_bits(const std::vector<double>& llr, const LinearCode& code, uint64_t tau) {
  int n = code.n;
  if (static_cast<int>(llr.size()) != n) fail_config("llr length != n");
  if (code.syn_words > kMaxSynWords) fail_config("code redundancy too large for the guessing decoder");
  Bits hard(n);
  for (int i = 0; i < n; ++i) hard[i] = llr[i] < 0.0 ? 1 : 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::abs(llr[a]) < std::abs(llr[b]); });

  SynAcc base;
  {
    std::vector<uint64_t> s(code.syn_words, 0);
    code.syndrome(hard, s.data());
    base.load(s.data(), code.syn_words);
  }

  BitDecodeResult res;
  PatternGen gen(n);
  while (res.stats.patterns < tau) {
    ++res.stats.patterns;
    SynAcc s = base;
    for (int r : gen.current()) code.xor_col_syndrome(order[r - 1], s.w.data());
    ++res.stats.queries;
    if (s.zero(code.syn_words)) {
      res.codeword = hard;
      for (int r : gen.current()) res.codeword[order[r - 1]] ^= 1;
      res.stats.found = true;
      return res;
    }
    if (!gen.next()) break;
  }
  return res;
}

BitDecodeResult hard_grand_decode(const Bits& hard, const LinearCode& code, uint64_t tau) {
  int n = code.n;
  if (static_cast<int>(hard.size()) != n) fail_config("word length != n");
  if (code.syn_words > kMaxSynWords) fail_config("code redundancy too large for the guessing decoder");
  SynAcc base;
  {
    std::vector<uint64_t> s(code.syn_words, 0);
    code.syndrome(hard, s.data());
    base.load(s.data(), code.syn_words);
  }
  BitDecodeResult res;
  std::vector<int> pos;  // current combination, ascending positions (0-based)
  int w = 0;
  auto emit = [&]() -> bool {  // returns true when decoding ends
    ++res.stats.patterns;
    SynAcc s = base;
    for (int p : pos) code.xor_col_syndrome(p, s.w.data());
    ++res.stats.queries;
    if (s.zero(code.syn_words)) {
      res.codeword = hard;
      for (int p : pos) res.codeword[p] ^= 1;
      res.stats.found = true;
      return true;
    }
    return false;
  };
  while (res.stats.patterns < tau) {
    if (emit()) return res;
    // next combination of size w, else first of size w+1
    int i = w - 1;
    while (i >= 0 && pos[i] == n - w + i) --i;
    if (i < 0) {
      ++w;
      if (w > n) break;
      pos.resize(w);
      for (int j = 0; j < w; ++j) pos[j] = j;
    } else {
      ++pos[i];
      for (int j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return res;
}

SubDecodeResult substitution_decode(const Bits& base, const LinearCode& code,
                                    const std::vector<SubCandidate>& cands, int unit_span, int n_units,
                                    uint64_t tau, std::vector<TraceEntry>* trace, size_t trace_cap) {
  if (code.syn_words > kMaxSynWords) fail_config("code redundancy too large for the guessing decoder");
  if (unit_span <= 0 || unit_span > 64) fail_config("unit span must be 1..64 bits");
  SynAcc base_syn;
  {
    std::vector<uint64_t> s(code.syn_words, 0);
    code.syndrome(base, s.data());
    base_syn.load(s.data(), code.syn_words);
  }
  SubDecodeResult res;
  int m = static_cast<int>(cands.size());
  std::vector<uint64_t> unit_mask((n_units + 63) / 64, 0);
  PatternGen gen(m);
  while (res.stats.patterns < tau) {
    ++res.stats.patterns;
    const auto& ranks = gen.current();
    // same-unit conflict?
    bool conflict = false;
    for (int r : ranks) {
      int u = cands[r - 1].unit;
      uint64_t& mw = unit_mask[u >> 6];
      uint64_t bit = 1ull << (u & 63);
      if (mw & bit) {
        conflict = true;
      }
      mw |= bit;
    }
    for (int r : ranks) {
      int u = cands[r - 1].unit;
      unit_mask[u >> 6] = 0;  // clear touched words (may clear siblings; all touched get reset)
    }
    bool hit = false;
    if (!conflict) {
      SynAcc s = base_syn;
      for (int r : ranks) {
        const auto& c = cands[r - 1];
        for (int w = 0; w < code.syn_words; ++w) s.w[w] ^= c.syn_delta[w];
      }
      ++res.stats.queries;
      if (s.zero(code.syn_words)) {
        res.codeword = base;
        for (int r : ranks) {
          const auto& c = cands[r - 1];
          uint64_t d = c.bit_delta;
          while (d) {
            int b = std::countr_zero(d);
            d &= d - 1;
            res.codeword[static_cast<size_t>(c.unit) * unit_span + b] ^= 1;
          }
        }
        res.stats.found = true;
        hit = true;
      }
    }
    if (trace && trace->size() < trace_cap) trace->push_back({ranks, conflict, hit});
    if (hit) return res;
    if (!gen.next()) break;
  }
  return res;
}

}  // namespace grandai
