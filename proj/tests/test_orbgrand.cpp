#include "grandai/orbgrand.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "grandai/error.hpp"
#include "grandai/rng.hpp"
#include "testing.hpp"

using namespace grandai;

namespace {

// Reference order: every subset of {1..n} listed by (weight asc, cardinality
// desc, lexicographic asc), built by exhaustive bitmask enumeration.
std::vector<std::vector<int>> brute_order(int n, long long max_weight) {
  std::vector<std::vector<int>> all;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    long long w = 0;
    for (int r = 1; r <= n; ++r)
      if (mask & (1u << (r - 1))) {
        s.push_back(r);
        w += r;
      }
    if (w <= max_weight) all.push_back(std::move(s));
  }
  std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    long long wa = logistic_weight(a), wb = logistic_weight(b);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return all;
}

}  // namespace

TEST_CASE(logistic_weight_sums_ranks) {
  CHECK_EQ(logistic_weight({}), 0LL);
  CHECK_EQ(logistic_weight({1, 2, 5}), 8LL);
}

TEST_CASE(pattern_sequence_matches_brute_force) {
  for (int n : {1, 2, 3, 5, 8, 10}) {
    auto want = brute_order(n, 1000);  // full space
    auto got = pattern_sequence(n, 1000, size_t(1) << 20);
    CHECK_EQ(got.size(), want.size());
    size_t limit = std::min(got.size(), want.size());
    for (size_t i = 0; i < limit; ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE(pattern_sequence_respects_weight_cap) {
  auto got = pattern_sequence(12, 9, size_t(1) << 20);
  auto want = brute_order(12, 9);
  CHECK_EQ(got.size(), want.size());
  for (size_t i = 0; i < std::min(got.size(), want.size()); ++i) CHECK(got[i] == want[i]);
  for (const auto& p : got) CHECK(logistic_weight(p) <= 9);
}

TEST_CASE(pattern_gen_complete_and_distinct) {
  const int n = 9;
  PatternGen gen(n);
  std::vector<uint32_t> seen;
  long long prev_w = -1;
  do {
    uint32_t mask = 0;
    for (int r : gen.current()) mask |= 1u << (r - 1);
    seen.push_back(mask);
    CHECK(gen.weight() >= prev_w);  // weights never decrease
    prev_w = gen.weight();
  } while (gen.next());
  CHECK_EQ(seen.size(), size_t(1) << n);  // every subset, empty included
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE(pattern_gen_first_elements) {
  // empty, {1}, {2}, {1,2}, {3}, {1,3}, {4}, ...
  auto got = pattern_sequence(6, 100, 7);
  std::vector<std::vector<int>> want = {{}, {1}, {2}, {1, 2}, {3}, {1, 3}, {4}};
  CHECK_EQ(got.size(), want.size());
  for (size_t i = 0; i < want.size(); ++i) CHECK(got[i] == want[i]);
}

TEST_CASE(bit_decoder_clean_word_first_query) {
  LinearCode code = make_random_linear_code(16, 11, 2);
  Rng rng(3);
  Bits info(code.k);
  for (auto& b : info) b = static_cast<uint8_t>(rng.bit());
  Bits cw = code.encode(info);
  std::vector<double> llr(code.n);
  for (int i = 0; i < code.n; ++i) llr[i] = cw[i] ? -4.0 : 4.0;
  auto r = orbgrand_decode_bits(llr, code, kNoBudget);
  CHECK(r.stats.found);
  CHECK_EQ(r.stats.queries, 1ull);
  CHECK(r.codeword == cw);
}

TEST_CASE(bit_decoder_corrects_weakest_flip) {
  LinearCode code = make_random_linear_code(16, 11, 2);
  Rng rng(4);
  Bits info(code.k);
  for (auto& b : info) b = static_cast<uint8_t>(rng.bit());
  Bits cw = code.encode(info);
  std::vector<double> llr(code.n);
  for (int i = 0; i < code.n; ++i) llr[i] = cw[i] ? -4.0 : 4.0;
  llr[7] = cw[7] ? 0.5 : -0.5;  // flipped hard decision, least reliable
  auto r = orbgrand_decode_bits(llr, code, kNoBudget);
  CHECK(r.stats.found);
  CHECK_EQ(r.stats.queries, 2ull);  // base word, then the single weakest flip
  CHECK(r.codeword == cw);
}

TEST_CASE(bit_decoder_honors_budget) {
  LinearCode code = make_random_linear_code(16, 11, 2);
  std::vector<double> llr(code.n, 1.0);
  llr[0] = -1.0;
  llr[3] = -1.0;  // likely not a codeword
  auto r = orbgrand_decode_bits(llr, code, 3);
  CHECK(r.stats.patterns <= 3);
  if (!r.stats.found) CHECK_EQ(r.stats.patterns, 3ull);
}

TEST_CASE(hard_decoder_corrects_single_error) {
  LinearCode code = make_random_linear_code(15, 8, 6);
  Rng rng(5);
  Bits info(code.k);
  for (auto& b : info) b = static_cast<uint8_t>(rng.bit());
  Bits cw = code.encode(info);
  Bits noisy = cw;
  noisy[9] ^= 1;
  auto r = hard_grand_decode(noisy, code, kNoBudget);
  CHECK(r.stats.found);
  CHECK(r.stats.queries <= 1ull + 15ull);  // base plus all single flips
  CHECK(r.codeword == cw);
}

TEST_CASE(hard_decoder_weight_order) {
  // the returned word never differs from the input in more bits than needed:
  // a clean codeword comes back identical in one query
  LinearCode code = make_random_linear_code(12, 7, 8);
  Bits cw = code.encode(Bits(7, 1));
  auto r = hard_grand_decode(cw, code, kNoBudget);
  CHECK(r.stats.found);
  CHECK_EQ(r.stats.queries, 1ull);
  CHECK(r.codeword == cw);
}

int main(int argc, char** argv) { return testing::run_all(argc, argv); }
