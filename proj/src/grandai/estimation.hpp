#pragma once
#include <complex>
#include <utility>
#include <vector>

#include "channel.hpp"
#include "rng.hpp"

namespace grandai {

// Multiplicative estimation error: every tap becomes h*(1+eps) with an
// independent eps ~ CN(0, nmse).
TapChannel perturb_taps_nmse(const TapChannel& ch, double nmse, Rng& rng);

// Decoder-side correlation mismatch, clamped to a stable magnitude.
double mismatch_rho(double rho, double delta);

// Least-squares fit of z_j = phi1 z_{j-1} + phi2 z_{j-2} over a length-6 tap
// row (rows j = 2..5 of the design, 0-based), solved via the 2x2 normal
// equations.
std::pair<cxd, cxd> ar2_fit_taps(const std::vector<cxd>& taps);

// Rebuild taps 2..J-1 from taps 0..1 with the recursion above.
std::vector<cxd> ar2_extrapolate(cxd z0, cxd z1, cxd phi1, cxd phi2, int J);

// Row-wise fit + extrapolation: taps 0..1 of each row are kept, the rest are
// replaced by the fitted recursion.
TapChannel ar2_fit_channel(const TapChannel& ch);

// Uniform scalar quantization: real and imaginary parts are independently
// mapped to the nearest of q evenly spaced levels spanning that component's
// [min, max] over all taps; ties round toward the lower level. Idempotent.
TapChannel quantize_taps(const TapChannel& ch, int q);

}  // namespace grandai
