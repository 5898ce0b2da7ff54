#pragma once
#include <cmath>
#include <complex>
#include <cstdint>

namespace grandai {

// splitmix64 finalizer: bijective 64-bit mix.
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derive an independent stream key from (key, id). Used to give every
// (point, frame, purpose) its own stream so results do not depend on how
// frames are scheduled across workers.
inline uint64_t rng_derive(uint64_t key, uint64_t id) {
  return mix64(key ^ (0x9e3779b97f4a7c15ull * (2 * id + 1)));
}

// Counter-based generator: output i is mix64(key + i*golden). Sequential use
// only needs the running counter; the point is that the sequence is a pure
// function of the key, independent of platform or library version.
class Rng {
 public:
  explicit Rng(uint64_t key) : state_(key) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // Uniform in the open interval (0,1); never returns 0 or 1, safe for log().
  double uniform() { return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52; }

  // Standard normal via Box-Muller, pairwise.
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double r = std::sqrt(-2.0 * std::log(uniform()));
    double th = 6.283185307179586476925286766559 * uniform();
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  // Circularly symmetric complex Gaussian with E|z|^2 = var.
  std::complex<double> cgauss(double var) {
    double s = std::sqrt(var * 0.5);
    double re = gauss();
    double im = gauss();
    return {s * re, s * im};
  }

  // One random bit (top bit of the next word).
  int bit() { return static_cast<int>(next_u64() >> 63); }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace grandai
