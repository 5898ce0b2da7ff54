#pragma once
#include <Eigen/Dense>
#include <cstdint>

#include "channel.hpp"

namespace grandai {

// Raw channel sounding record: m received samples per transmitted pulse shape,
// one column per pulse.
struct ImpulseResponse {
  int m = 0;
  int mu = 0;
  Eigen::MatrixXcd g;  // m x mu
};

// Random sparse multipath record. Sample 0 of every pulse is always occupied;
// later delays appear with probability `sparsity` and carry an exponentially
// decaying magnitude profile decay^s (so decay = 0 leaves a single leading
// tap per pulse).
ImpulseResponse make_synthetic_impulse_response(uint64_t seed, int m, int mu, double sparsity, double decay);

// Matched-filter length for an m-sample record sounded with an L-sample pulse.
inline long sounding_filtered_length(long m, long L) { return m + 2 * L - 2; }

// Symbol-spaced tap count recovered per pulse.
inline int sounding_tap_count(long m, long L) { return static_cast<int>(sounding_filtered_length(m, L) / L); }

// Recover symbol-spaced taps from a sounding record.
//
// The probe is the unit-energy single-cycle complex tone u_l =
// exp(i*2*pi*l/L)/sqrt(L), l = 1..L (carrier f_s/L, so the discrete-time
// phase advances by 2*pi/L per sample and f_s cancels out). Each pulse column
// is convolved with u, then with the matched filter conj(u) reversed, giving
// eta = m + 2L - 2 samples; sampling that at q = (L+2) + j*L — the lag-0
// matched-filter peak for a zero-delay path, then symbol-spaced intervals —
// yields floor(eta/L) taps per pulse. Soundings repeating the same pulse share
// its tap row; rows repeat cyclically when the data block outruns them.
TapChannel extract_taps(const ImpulseResponse& ir, int L, double f_s, int soundings_per_pulse);

// soundings_per_pulse defaults to floor(m/L)
TapChannel extract_taps(const ImpulseResponse& ir, int L, double f_s);

}  // namespace grandai
