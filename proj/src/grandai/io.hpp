#pragma once
#include <string>

#include "channel.hpp"
#include "sounding.hpp"

namespace grandai {

// Tap table CSV, header "k,j,re,im": row index k (0-based output symbol /
// sounding), tap delay j, complex value. Absent (k,j) pairs read back as 0.
void write_taps_csv(const TapChannel& ch, const std::string& path);
TapChannel read_taps_csv(const std::string& path);

// Sounding record CSV, header "sample,pulse,re,im" (0-based indices).
void write_impulse_response_csv(const ImpulseResponse& ir, const std::string& path);
ImpulseResponse read_impulse_response_csv(const std::string& path);

}  // namespace grandai
