#pragma once
#include <Eigen/Dense>
#include <vector>

#include "modem.hpp"
#include "orbgrand.hpp"

namespace grandai {

// Per-symbol candidate label sets for one block: each symbol's set holds the
// gamma constellation points nearest its received sample, hard decision first
// (gamma clamped to the constellation size).
std::vector<std::vector<uint32_t>> block_symbol_sets(const Constellation& cst, const cxd* y, int b,
                                                     int gamma);

// Posterior probabilities over the product candidate set of one block under a
// zero-mean complex Gaussian residual with covariance `cov`, uniform prior on
// the set. Combos enumerate odometer-style with the first symbol most
// significant; combos_out (optional) receives each combo's labels.
std::vector<double> block_posteriors(const Eigen::MatrixXcd& cov, const cxd* y,
                                     const std::vector<std::vector<uint32_t>>& sets,
                                     const Constellation& cst,
                                     std::vector<std::vector<uint32_t>>* combos_out = nullptr);

struct AiCandidateInfo {
  int block = 0;
  double penalty = 0.0;
  uint32_t ord = 0;              // enumeration tie-break, matches decode order
  std::vector<uint32_t> labels;  // the block's symbol labels after substitution
};

struct AiResult {
  Bits codeword;  // meaningful iff found
  bool found = false;
  uint64_t queries = 0;
  uint64_t patterns = 0;
};

// Block-correlated guessing decoder. Splits the symbol vector into length-b
// blocks, scores each block's candidate substitutions under that block's
// residual covariance, sorts all substitutions by likelihood penalty, and
// guesses rank patterns over them, discarding same-block collisions without a
// codebook query. The base word is the per-block most likely combo.
class AiDecoder {
 public:
  // block_cov: one covariance shared by all blocks, or one per block.
  AiDecoder(const LinearCode& code, const Constellation& cst, int b, int gamma, uint64_t tau,
            const std::vector<Eigen::MatrixXcd>& block_cov);

  int n_symbols() const { return n_s_; }
  int n_blocks() const { return n_blocks_; }

  AiResult decode(const std::vector<cxd>& y, std::vector<AiCandidateInfo>* cand_info = nullptr,
                  std::vector<TraceEntry>* trace = nullptr, size_t trace_cap = 0);

 private:
  const LinearCode* code_;
  const Constellation* cst_;
  int b_, gamma_, n_s_, n_blocks_, span_;
  uint64_t tau_;
  std::vector<Eigen::MatrixXcd> cov_inv_;  // size 1 (shared) or n_blocks
  // scratch reused across frames (one decoder instance per worker)
  std::vector<uint32_t> base_labels_;
  Bits base_bits_;
  std::vector<SubCandidate> cands_;

  const Eigen::MatrixXcd& inv_for(int block) const {
    return cov_inv_.size() == 1 ? cov_inv_[0] : cov_inv_[static_cast<size_t>(block)];
  }
};

// Symbol-level decoder over white residual noise: the b = 1 special case.
AiResult symbol_orbgrand_decode(const std::vector<cxd>& y, const LinearCode& code, const Constellation& cst,
                                int gamma, double sigma2, uint64_t tau);

}  // namespace grandai
