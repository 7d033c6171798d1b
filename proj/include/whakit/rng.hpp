#pragma once

#include <cstdint>

namespace whakit {

/// 64-bit linear congruential generator (Knuth's MMIX constants).  Used for
/// every sampled check so that a seed reproduces a run exactly.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  /// Uniform-ish value in [0, n); high bits are used since the low bits of an
  /// LCG have short periods.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : (next() >> 16) % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace whakit
