#include "grandai.h"

#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "grandai/analysis.hpp"
#include "grandai/channel.hpp"
#include "grandai/code.hpp"
#include "grandai/equalizer.hpp"
#include "grandai/error.hpp"
#include "grandai/harness.hpp"
#include "grandai/io.hpp"
#include "grandai/modem.hpp"
#include "grandai/orbgrand_ai.hpp"
#include "grandai/sounding.hpp"

using namespace grandai;

namespace {

thread_local std::string g_last_error;

grandai_status to_status(Status s) {
  switch (s) {
    case Status::ok: return GRANDAI_OK;
    case Status::config: return GRANDAI_ERR_CONFIG;
    case Status::numeric: return GRANDAI_ERR_NUMERIC;
    case Status::io: return GRANDAI_ERR_IO;
  }
  return GRANDAI_ERR_NUMERIC;
}

template <typename Fn>
grandai_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GRANDAI_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.status());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GRANDAI_ERR_NUMERIC;
  } catch (...) {
    g_last_error = "unknown error";
    return GRANDAI_ERR_NUMERIC;
  }
}

grandai_status arg_error(const char* msg) {
  g_last_error = msg;
  return GRANDAI_ERR_CONFIG;
}

Bits to_bits(const uint8_t* p, int n) {
  Bits b(n);
  for (int i = 0; i < n; ++i) b[i] = p[i] ? 1 : 0;
  return b;
}

}  // namespace

struct grandai_code {
  LinearCode code;
};

struct grandai_decoder {
  LinearCode code;    // owned copies: the handle outlives its inputs
  Constellation cst;
  double rho = 0.0;
  std::unique_ptr<AiDecoder> dec;  // references `code` and `cst` above
};

struct grandai_sim {
  SimConfig cfg;
};

extern "C" {

const char* grandai_status_name(grandai_status s) {
  switch (s) {
    case GRANDAI_OK: return "ok";
    case GRANDAI_ERR_CONFIG: return "config";
    case GRANDAI_ERR_NUMERIC: return "numeric";
    case GRANDAI_ERR_IO: return "io";
  }
  return "unknown";
}

const char* grandai_last_error(void) { return g_last_error.c_str(); }

grandai_status grandai_code_make_rlc(int n, int k, uint64_t seed, grandai_code** out) {
  if (!out) return arg_error("null out");
  return guarded([&] {
    auto* h = new grandai_code{make_random_linear_code(n, k, seed)};
    *out = h;
  });
}

grandai_status grandai_code_make_crc(int k, uint64_t poly_koopman, grandai_code** out) {
  if (!out) return arg_error("null out");
  return guarded([&] {
    auto* h = new grandai_code{make_crc_code(k, poly_koopman)};
    *out = h;
  });
}

void grandai_code_free(grandai_code* c) { delete c; }

int grandai_code_n(const grandai_code* c) { return c ? c->code.n : 0; }
int grandai_code_k(const grandai_code* c) { return c ? c->code.k : 0; }

grandai_status grandai_code_encode(const grandai_code* c, const uint8_t* info, uint8_t* out_codeword) {
  if (!c || !info || !out_codeword) return arg_error("null argument");
  return guarded([&] {
    Bits cw = c->code.encode(to_bits(info, c->code.k));
    for (int i = 0; i < c->code.n; ++i) out_codeword[i] = cw[i];
  });
}

grandai_status grandai_code_is_member(const grandai_code* c, const uint8_t* word, int* out_member) {
  if (!c || !word || !out_member) return arg_error("null argument");
  return guarded([&] { *out_member = c->code.is_member(to_bits(word, c->code.n)) ? 1 : 0; });
}

grandai_status grandai_code_generator_row(const grandai_code* c, int row, uint8_t* out_bits) {
  if (!c || !out_bits) return arg_error("null argument");
  if (row < 0 || row >= c->code.k) return arg_error("generator row out of range");
  return guarded([&] {
    for (int j = 0; j < c->code.n; ++j) out_bits[j] = c->code.G.get(row, j);
  });
}

grandai_status grandai_code_parity_row(const grandai_code* c, int row, uint8_t* out_bits) {
  if (!c || !out_bits) return arg_error("null argument");
  if (row < 0 || row >= c->code.n - c->code.k) return arg_error("parity row out of range");
  return guarded([&] {
    for (int j = 0; j < c->code.n; ++j) out_bits[j] = c->code.H.get(row, j);
  });
}

grandai_status grandai_entropy_white(double sigma2, double* out) {
  if (!out) return arg_error("null out");
  return guarded([&] { *out = white_entropy_rate(sigma2); });
}

grandai_status grandai_entropy_gm1(double rho, double sigma2, int n, double* out) {
  if (!out) return arg_error("null out");
  return guarded([&] { *out = gm1_entropy_rate(rho, sigma2, n); });
}

grandai_status grandai_entropy_gm1_block(double rho, double sigma2, int b, double* out) {
  if (!out) return arg_error("null out");
  return guarded([&] { *out = gm1_block_entropy_rate(rho, sigma2, b); });
}

grandai_status grandai_entropy_ar2(double rho1, double rho2, double sigma2, int n, double* out) {
  if (!out) return arg_error("null out");
  return guarded([&] { *out = ar2_entropy_rate(rho1, rho2, sigma2, n); });
}

grandai_status grandai_ar2_determinant(double rho1, double rho2, double sigma2, int n, double* out) {
  if (!out) return arg_error("null out");
  return guarded([&] { *out = ar2_determinant_closed_form(rho1, rho2, sigma2, n); });
}

int grandai_ar2_valid(double rho1, double rho2) { return ar2_params_valid(rho1, rho2) ? 1 : 0; }

grandai_status grandai_synth_impulse_response_file(uint64_t seed, int m, int mu, double sparsity,
                                                   double decay, const char* path) {
  if (!path) return arg_error("null path");
  return guarded([&] {
    ImpulseResponse ir = make_synthetic_impulse_response(seed, m, mu, sparsity, decay);
    write_impulse_response_csv(ir, path);
  });
}

grandai_status grandai_extract_taps_file(const char* ir_csv, int L, double f_s, const char* out_csv) {
  if (!ir_csv || !out_csv) return arg_error("null path");
  return guarded([&] {
    ImpulseResponse ir = read_impulse_response_csv(ir_csv);
    TapChannel t = extract_taps(ir, L, f_s);
    write_taps_csv(t, out_csv);
  });
}

grandai_status grandai_decoder_create_dicode(const grandai_code* c, const char* modulation, double rho,
                                             double sigma2, int b, int gamma, uint64_t tau,
                                             grandai_decoder** out) {
  if (!c || !modulation || !out) return arg_error("null argument");
  return guarded([&] {
    if (!(rho > -1.0 && rho < 1.0)) fail_config("rho must lie in (-1,1)");
    if (tau == 0) tau = kNoBudget;
    auto h = std::make_unique<grandai_decoder>();
    h->code = c->code;
    h->cst = Constellation::make(modulation);
    h->rho = rho;
    std::vector<Eigen::MatrixXcd> blocks = {gm1_covariance(rho, sigma2, b)};
    h->dec = std::make_unique<AiDecoder>(h->code, h->cst, b, gamma, tau, blocks);
    *out = h.release();
  });
}

grandai_status grandai_decoder_decode(grandai_decoder* d, const double* y, int n_symbols,
                                      uint8_t* out_codeword, int* out_found, uint64_t* out_queries) {
  if (!d || !y || !out_codeword || !out_found) return arg_error("null argument");
  if (n_symbols != d->dec->n_symbols()) return arg_error("n_symbols does not match the code");
  return guarded([&] {
    std::vector<cxd> rx(n_symbols);
    for (int i = 0; i < n_symbols; ++i) rx[i] = cxd(y[2 * i], y[2 * i + 1]);
    std::vector<cxd> eq = zf_equalize_dicode(rx, d->rho);
    AiResult r = d->dec->decode(eq);
    *out_found = r.found ? 1 : 0;
    if (r.found)
      for (size_t i = 0; i < r.codeword.size(); ++i) out_codeword[i] = r.codeword[i];
    if (out_queries) *out_queries = r.queries;
  });
}

void grandai_decoder_free(grandai_decoder* d) { delete d; }

grandai_status grandai_sim_create(grandai_sim** out) {
  if (!out) return arg_error("null out");
  return guarded([&] { *out = new grandai_sim{}; });
}

grandai_status grandai_sim_load_file(grandai_sim* s, const char* path) {
  if (!s || !path) return arg_error("null argument");
  return guarded([&] {
    SimConfig loaded = SimConfig::from_file(path);
    for (const auto& [k, v] : loaded.entries()) s->cfg.set(k, v);
  });
}

grandai_status grandai_sim_set(grandai_sim* s, const char* key, const char* value) {
  if (!s || !key || !value) return arg_error("null argument");
  return guarded([&] { s->cfg.set(key, value); });
}

grandai_status grandai_sim_run_to_csv(grandai_sim* s, const char* out_csv, int workers) {
  if (!s || !out_csv) return arg_error("null argument");
  return guarded([&] {
    SweepResult r = run_sweep(s->cfg, workers);
    write_sweep_csv(r, out_csv);
  });
}

void grandai_sim_free(grandai_sim* s) { delete s; }

}  // extern "C"
