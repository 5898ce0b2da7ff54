#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "code.hpp"

namespace grandai {

// Sum of the (1-based) ranks in a pattern.
long long logistic_weight(const std::vector<int>& ranks);

// Enumerates every set of distinct ranks drawn from 1..n exactly once, ordered
// by: total weight ascending; within a weight, cardinality descending; within
// (weight, cardinality), rank sequences lexicographically ascending. The first
// pattern is the empty set. Lazily generated; the whole space is exhausted
// after n(n+1)/2 weights.
class PatternGen {
 public:
  explicit PatternGen(int n);

  const std::vector<int>& current() const { return seq_; }
  long long weight() const { return W_; }
  bool exhausted() const { return done_; }
  bool next();

 private:
  int n_;
  long long W_ = 0;
  int c_ = 0;
  std::vector<int> seq_;
  bool done_ = false;

  bool fill_min(int from, int prev, long long remaining);
  bool advance_same_wc();
  bool start_wc(long long W, int c);
};

// Materialized prefix of the guessing order (patterns with weight <= max_weight,
// at most max_count of them).
std::vector<std::vector<int>> pattern_sequence(int n, long long max_weight, size_t max_count);

struct DecodeStats {
  bool found = false;
  uint64_t queries = 0;   // codebook membership checks issued
  uint64_t patterns = 0;  // patterns generated (conflicts included)
};

inline constexpr uint64_t kNoBudget = ~0ull;

// Bit-level decoder: flip patterns over reliability ranks (|llr| ascending,
// ties by position) applied to the hard-decision word.
struct BitDecodeResult {
  Bits codeword;
  DecodeStats stats;
};
BitDecodeResult orbgrand_decode_bits(const std::vector<double>& llr, const LinearCode& code, uint64_t tau);

// Hard-decision baseline: flip patterns in Hamming-weight order (weight
// ascending, positions lexicographic), no reliability information.
BitDecodeResult hard_grand_decode(const Bits& hard, const LinearCode& code, uint64_t tau);

// --- rank-ordered substitution engine (shared by the block decoders) ---

inline constexpr int kMaxSynWords = 4;  // redundancy up to 256 bits

// One precomputed substitution: replace `unit`'s span of the running word.
// Patterns that pick two candidates of the same unit are discarded without a
// codebook query (they still consume pattern budget).
struct SubCandidate {
  int unit = 0;
  double penalty = 0.0;                        // primary sort key
  uint32_t ord = 0;                            // enumeration tie-break
  uint64_t bit_delta = 0;                      // XOR mask within the unit span
  std::array<uint64_t, kMaxSynWords> syn_delta{};  // syndrome XOR vs base word
};

struct TraceEntry {
  std::vector<int> ranks;
  bool conflict = false;  // discarded without querying
  bool hit = false;       // query found a codebook member
};

struct SubDecodeResult {
  Bits codeword;
  DecodeStats stats;
};

// `cands` must already be sorted into guessing rank order (rank r = cands[r-1]).
// `unit_span` is the bit width every unit occupies in the word (<= 64).
SubDecodeResult substitution_decode(const Bits& base, const LinearCode& code,
                                    const std::vector<SubCandidate>& cands, int unit_span, int n_units,
                                    uint64_t tau, std::vector<TraceEntry>* trace = nullptr,
                                    size_t trace_cap = 0);

}  // namespace grandai
