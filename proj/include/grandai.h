/* C interface for the correlated-noise guessing decoder library.
 *
 * Every function that can fail returns a grandai_status; on failure a
 * thread-local message is available from grandai_last_error(). Out-parameters
 * are written only on GRANDAI_OK. Handles are opaque and must be released
 * with the matching *_free call.
 */
#ifndef GRANDAI_H
#define GRANDAI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum grandai_status {
  GRANDAI_OK = 0,
  GRANDAI_ERR_CONFIG = 1,  /* invalid argument or configuration */
  GRANDAI_ERR_NUMERIC = 2, /* computation could not be carried out */
  GRANDAI_ERR_IO = 3       /* file missing, unreadable, or malformed */
} grandai_status;

const char* grandai_status_name(grandai_status s);
/* Message for the most recent failing call on this thread ("" if none). */
const char* grandai_last_error(void);

/* ---- binary linear codes ------------------------------------------------ */

typedef struct grandai_code grandai_code;

/* Random systematic [n,k] code; `seed` fixes the parity part. */
grandai_status grandai_code_make_rlc(int n, int k, uint64_t seed, grandai_code** out);
/* Systematic CRC code with k message bits. `poly_koopman` packs the generator
 * polynomial with the top bit dropped and the always-1 constant term implied,
 * so its bit length is the CRC degree (e.g. 0xb41 -> degree 12 -> [k+12,k]). */
grandai_status grandai_code_make_crc(int k, uint64_t poly_koopman, grandai_code** out);
void grandai_code_free(grandai_code* c);

int grandai_code_n(const grandai_code* c);
int grandai_code_k(const grandai_code* c);
/* info: k bytes in {0,1}; out_codeword: n bytes. */
grandai_status grandai_code_encode(const grandai_code* c, const uint8_t* info, uint8_t* out_codeword);
/* word: n bytes in {0,1}; *out_member set to 0/1. */
grandai_status grandai_code_is_member(const grandai_code* c, const uint8_t* word, int* out_member);
/* Row `row` of the generator (k rows) / parity-check (n-k rows) matrix,
 * written as n bytes in {0,1}. */
grandai_status grandai_code_generator_row(const grandai_code* c, int row, uint8_t* out_bits);
grandai_status grandai_code_parity_row(const grandai_code* c, int row, uint8_t* out_bits);

/* ---- noise entropy rates (nats per sample) ------------------------------ */

/* Circular complex white noise. */
grandai_status grandai_entropy_white(double sigma2, double* out);
/* Stationary first-order Gauss-Markov noise, length-n window. */
grandai_status grandai_entropy_gm1(double rho, double sigma2, int n, double* out);
/* Same process modelled as independent length-b blocks. */
grandai_status grandai_entropy_gm1_block(double rho, double sigma2, int b, double* out);
/* Real second-order autoregressive noise with lag correlations rho1, rho2. */
grandai_status grandai_entropy_ar2(double rho1, double rho2, double sigma2, int n, double* out);
/* Determinant of the order-n AR(2) correlation-matrix covariance (n >= 4). */
grandai_status grandai_ar2_determinant(double rho1, double rho2, double sigma2, int n, double* out);
/* 1 when (rho1, rho2) admit a stationary AR(2) process, else 0. */
int grandai_ar2_valid(double rho1, double rho2);

/* ---- channel sounding --------------------------------------------------- */

/* Draw a random sparse baseband impulse response (m samples, mu of them
 * leading dense, tail kept with probability `sparsity` and geometric decay)
 * and write it as CSV. */
grandai_status grandai_synth_impulse_response_file(uint64_t seed, int m, int mu, double sparsity,
                                                   double decay, const char* path);
/* Sound the stored impulse response with length-L probe pulses and write the
 * extracted symbol-spaced tap table as CSV. */
grandai_status grandai_extract_taps_file(const char* ir_csv, int L, double f_s, const char* out_csv);

/* ---- one-shot decoding, dicode channel ---------------------------------- */

typedef struct grandai_decoder grandai_decoder;

/* Receiver for the two-tap (1, -rho) channel: zero-forcing equalizer followed
 * by the block-correlated guessing decoder. `modulation` is "bpsk", "qam16" or
 * "qam256"; sigma2 is the post-equalizer stationary noise power; b is the
 * block length, gamma the per-symbol candidate count, tau the guess budget
 * (0 = unlimited). */
grandai_status grandai_decoder_create_dicode(const grandai_code* c, const char* modulation, double rho,
                                             double sigma2, int b, int gamma, uint64_t tau,
                                             grandai_decoder** out);
/* y: received channel-output samples as n_symbols (re, im) pairs. On return
 * *out_found is 0/1; when found, out_codeword holds n bytes in {0,1}.
 * out_queries (optional) receives the number of codebook lookups. */
grandai_status grandai_decoder_decode(grandai_decoder* d, const double* y, int n_symbols,
                                      uint8_t* out_codeword, int* out_found, uint64_t* out_queries);
void grandai_decoder_free(grandai_decoder* d);

/* ---- Monte-Carlo block-error-rate sweeps -------------------------------- */

typedef struct grandai_sim grandai_sim;

grandai_status grandai_sim_create(grandai_sim** out);
/* Load `key = value` lines; later assignments override earlier ones. */
grandai_status grandai_sim_load_file(grandai_sim* s, const char* path);
grandai_status grandai_sim_set(grandai_sim* s, const char* key, const char* value);
/* Run the configured sweep and write results to `out_csv` (plus a .meta
 * sidecar with the resolved configuration). workers <= 0 picks the count from
 * GRANDAI_WORKERS or the hardware. Results are independent of `workers`. */
grandai_status grandai_sim_run_to_csv(grandai_sim* s, const char* out_csv, int workers);
void grandai_sim_free(grandai_sim* s);

#ifdef __cplusplus
}
#endif

#endif /* GRANDAI_H */
