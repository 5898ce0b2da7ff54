#include "orbgrand_ai.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "error.hpp"

namespace grandai {

std::vector<std::vector<uint32_t>> block_symbol_sets(const Constellation& cst, const cxd* y, int b,
                                                     int gamma) {
  int g = std::min(gamma, cst.size());
  if (g < 1) fail_config("gamma must be >= 1");
  std::vector<std::vector<uint32_t>> sets(b);
  for (int s = 0; s < b; ++s) sets[s] = cst.nearest(y[s], g);
  return sets;
}

std::vector<double> block_posteriors(const Eigen::MatrixXcd& cov, const cxd* y,
                                     const std::vector<std::vector<uint32_t>>& sets,
                                     const Constellation& cst,
                                     std::vector<std::vector<uint32_t>>* combos_out) {
  int b = static_cast<int>(sets.size());
  if (cov.rows() != b || cov.cols() != b) fail_config("covariance size != block size");
  Eigen::LLT<Eigen::MatrixXcd> llt(cov);
  if (llt.info() != Eigen::Success) fail_numeric("block covariance not positive definite");
  Eigen::MatrixXcd inv = llt.solve(Eigen::MatrixXcd::Identity(b, b));
  size_t total = 1;
  for (const auto& s : sets) {
    if (s.empty()) fail_config("empty candidate set");
    total *= s.size();
  }
  std::vector<double> q(total);
  std::vector<int> choice(b, 0);
  if (combos_out) combos_out->assign(total, {});
  for (size_t idx = 0; idx < total; ++idx) {
    // odometer decode, first symbol most significant
    size_t rem = idx;
    for (int s = b - 1; s >= 0; --s) {
      choice[s] = static_cast<int>(rem % sets[s].size());
      rem /= sets[s].size();
    }
    Eigen::VectorXcd d(b);
    for (int s = 0; s < b; ++s) d(s) = y[s] - cst.point(sets[s][static_cast<size_t>(choice[s])]);
    q[idx] = std::real(d.dot(inv * d));  // Eigen dot conjugates the left operand
    if (combos_out) {
      auto& c = (*combos_out)[idx];
      c.resize(b);
      for (int s = 0; s < b; ++s) c[s] = sets[s][static_cast<size_t>(choice[s])];
    }
  }
  double qmin = *std::min_element(q.begin(), q.end());
  double z = 0.0;
  std::vector<double> p(total);
  for (size_t i = 0; i < total; ++i) {
    p[i] = std::exp(-(q[i] - qmin));
    z += p[i];
  }
  for (double& v : p) v /= z;
  return p;
}

AiDecoder::AiDecoder(const LinearCode& code, const Constellation& cst, int b, int gamma, uint64_t tau,
                     const std::vector<Eigen::MatrixXcd>& block_cov)
    : code_(&code), cst_(&cst), b_(b), gamma_(std::min(gamma, cst.size())), tau_(tau) {
  int m = cst.bits_per_symbol();
  if (code.n % m != 0) fail_config("code length not a multiple of bits per symbol");
  n_s_ = code.n / m;
  if (b_ < 1 || n_s_ % b_ != 0) fail_config("block size must divide the symbol count");
  n_blocks_ = n_s_ / b_;
  span_ = b_ * m;
  if (span_ > 64) fail_config("block bit span exceeds 64 bits");
  if (gamma_ < 2) fail_config("gamma must be >= 2");
  if (block_cov.size() != 1 && static_cast<int>(block_cov.size()) != n_blocks_)
    fail_config("need one covariance, or one per block");
  double combos = std::pow(static_cast<double>(gamma_), b_);
  if (combos > 65536.0) fail_config("per-block candidate set too large");
  cov_inv_.reserve(block_cov.size());
  for (const auto& c : block_cov) {
    if (c.rows() != b_ || c.cols() != b_) fail_config("covariance size != block size");
    Eigen::LLT<Eigen::MatrixXcd> llt(c);
    if (llt.info() != Eigen::Success) fail_numeric("block covariance not positive definite");
    cov_inv_.push_back(llt.solve(Eigen::MatrixXcd::Identity(b_, b_)));
  }
  base_labels_.resize(n_s_);
  base_bits_.resize(code.n);
}

AiResult AiDecoder::decode(const std::vector<cxd>& y, std::vector<AiCandidateInfo>* cand_info,
                           std::vector<TraceEntry>* trace, size_t trace_cap) {
  if (static_cast<int>(y.size()) != n_s_) fail_config("symbol count mismatch");
  const Constellation& cst = *cst_;
  const int m = cst.bits_per_symbol();
  const int g = gamma_;

  cands_.clear();
  if (cand_info) cand_info->clear();
  uint32_t ord = 0;
  size_t n_combo = 1;
  for (int s = 0; s < b_; ++s) n_combo *= static_cast<size_t>(g);
  static thread_local std::vector<double> qrel;
  static thread_local std::vector<cxd> e, v;
  static thread_local std::vector<uint32_t> near;
  static thread_local std::vector<int> choice;
  qrel.resize(n_combo);
  e.resize(b_);
  v.resize(b_);
  near.resize(static_cast<size_t>(b_) * g);
  choice.resize(b_);

  for (int blk = 0; blk < n_blocks_; ++blk) {
    const cxd* yb = y.data() + static_cast<size_t>(blk) * b_;
    const Eigen::MatrixXcd& inv = inv_for(blk);
    // candidate labels per symbol: the g points nearest the received sample,
    // hard decision first
    for (int s = 0; s < b_; ++s) {
      cst.nearest_into(yb[s], g, near.data() + static_cast<size_t>(s) * g);
      e[s] = yb[s] - cst.point(near[static_cast<size_t>(s) * g]);
    }
    for (int s = 0; s < b_; ++s) {
      cxd acc = 0.0;
      for (int t = 0; t < b_; ++t) acc += inv(s, t) * e[t];
      v[s] = acc;
    }
    auto label_at = [&](int s, int c) -> uint32_t {
      return near[static_cast<size_t>(s) * g + static_cast<size_t>(c)];
    };
    // relative quadratic form for every combo in the product set
    size_t best = 0;
    double best_q = 0.0;
    for (size_t idx = 0; idx < n_combo; ++idx) {
      size_t rem = idx;
      int nnz = 0;
      static thread_local std::vector<int> changed;
      changed.clear();
      for (int s = b_ - 1; s >= 0; --s) {
        int c = static_cast<int>(rem % g);
        rem /= static_cast<size_t>(g);
        choice[s] = c;
        if (c) ++nnz;
      }
      double q = 0.0;
      if (nnz) {
        for (int s = 0; s < b_; ++s)
          if (choice[s]) changed.push_back(s);
        cxd quad = 0.0, lin = 0.0;
        for (int a : changed) {
          cxd da = cst.point(label_at(a, choice[a])) - cst.point(label_at(a, 0));
          lin += std::conj(da) * v[a];
          for (int bpos : changed) {
            cxd db = cst.point(label_at(bpos, choice[bpos])) - cst.point(label_at(bpos, 0));
            quad += std::conj(da) * inv(a, bpos) * db;
          }
        }
        q = -2.0 * std::real(lin) + std::real(quad);
      }
      qrel[idx] = q;
      if (q < best_q) {
        best_q = q;
        best = idx;
      }
    }
    // the block's base word is the most likely combo
    size_t rem = best;
    for (int s = b_ - 1; s >= 0; --s) {
      choice[s] = static_cast<int>(rem % g);
      rem /= static_cast<size_t>(g);
    }
    uint32_t* bl = base_labels_.data() + static_cast<size_t>(blk) * b_;
    for (int s = 0; s < b_; ++s) bl[s] = label_at(s, choice[s]);
    // every other combo becomes a substitution candidate
    for (size_t idx = 0; idx < n_combo; ++idx) {
      if (idx == best) continue;
      SubCandidate sc;
      sc.unit = blk;
      sc.penalty = qrel[idx] - best_q;
      sc.ord = ord++;
      size_t r2 = idx;
      for (int s = b_ - 1; s >= 0; --s) {
        choice[s] = static_cast<int>(r2 % g);
        r2 /= static_cast<size_t>(g);
      }
      for (int s = 0; s < b_; ++s) {
        uint32_t lab = label_at(s, choice[s]);
        uint32_t dl = lab ^ bl[s];
        if (!dl) continue;
        for (int bit = 0; bit < m; ++bit)
          if ((dl >> (m - 1 - bit)) & 1u) sc.bit_delta |= 1ull << (s * m + bit);
      }
      if (sc.bit_delta == 0) continue;  // duplicate of the base word (label sets may overlap)
      uint64_t d = sc.bit_delta;
      while (d) {
        int p = std::countr_zero(d);
        d &= d - 1;
        code_->xor_col_syndrome(blk * span_ + p, sc.syn_delta.data());
      }
      cands_.push_back(sc);
      if (cand_info) {
        AiCandidateInfo info;
        info.block = blk;
        info.penalty = sc.penalty;
        info.ord = sc.ord;
        info.labels.resize(b_);
        for (int s = 0; s < b_; ++s) info.labels[s] = label_at(s, choice[s]);
        cand_info->push_back(std::move(info));
      }
    }
  }

  std::sort(cands_.begin(), cands_.end(), [](const SubCandidate& a, const SubCandidate& b) {
    if (a.penalty != b.penalty) return a.penalty < b.penalty;
    if (a.unit != b.unit) return a.unit < b.unit;
    return a.ord < b.ord;
  });
  if (cand_info)
    std::sort(cand_info->begin(), cand_info->end(), [](const AiCandidateInfo& a, const AiCandidateInfo& b) {
      if (a.penalty != b.penalty) return a.penalty < b.penalty;
      if (a.block != b.block) return a.block < b.block;
      return a.ord < b.ord;
    });

  for (int i = 0; i < n_s_; ++i) cst.label_to_bits(base_labels_[i], base_bits_.data() + static_cast<size_t>(i) * m);

  SubDecodeResult sub =
      substitution_decode(base_bits_, *code_, cands_, span_, n_blocks_, tau_, trace, trace_cap);
  AiResult res;
  res.codeword = std::move(sub.codeword);
  res.found = sub.stats.found;
  res.queries = sub.stats.queries;
  res.patterns = sub.stats.patterns;
  return res;
}

AiResult symbol_orbgrand_decode(const std::vector<cxd>& y, const LinearCode& code, const Constellation& cst,
                                int gamma, double sigma2, uint64_t tau) {
  if (sigma2 <= 0.0) fail_config("sigma2 must be positive");
  Eigen::MatrixXcd cov(1, 1);
  cov(0, 0) = sigma2;
  AiDecoder dec(code, cst, 1, gamma, tau, {cov});
  return dec.decode(y);
}

}  // namespace grandai
