#pragma once

#include <complex>
#include <cstdint>

namespace bohrseq {

// Counter-based random stream: every output is a hash of (key, counter),
// where the key is derived from a (seed, stream) pair. Distinct stream
// indices under one seed give statistically independent streams; identical
// (seed, stream) pairs replay the same draws, so sampling loops that derive
// one stream per sample index are order-independent and reproducible.
//
// Determinism is guaranteed within one build, not bit-exact across
// platforms (the Gaussian path depends on libm).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  // Uniform on (0, 1].
  double next_unit();

  // Standard normal via Box-Muller; draws come in cached pairs.
  double next_gaussian();

  // Both parts are independent standard normals.
  std::complex<double> next_complex_gaussian();

 private:
  std::uint64_t key_;
  std::uint64_t ctr_lo_ = 0;
  std::uint64_t ctr_hi_ = 0;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

}  // namespace bohrseq
