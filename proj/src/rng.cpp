#include "bohrseq/rng.hpp"

#include <cmath>
#include <numbers>

namespace bohrseq {

namespace {

// splitmix64 finalizer (Vigna / Steele-Lea-Flood).
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  const std::uint64_t a = mix64(seed ^ 0x243F6A8885A308D3ULL);
  const std::uint64_t b = mix64(stream ^ 0x13198A2E03707344ULL);
  key_ = mix64(a + kGolden * b);
}

std::uint64_t RngStream::next_u64() {
  if (++ctr_lo_ == 0) ++ctr_hi_;
  return mix64(key_ + kGolden * ctr_lo_ + 0xD1B54A32D192ED03ULL * ctr_hi_);
}

double RngStream::next_unit() {
  // 53-bit mantissa mapped to (0, 1]; never returns 0, so log() is safe.
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_gaussian_ = r * std::sin(theta);
  has_cached_gaussian_ = true;
  return r * std::cos(theta);
}

std::complex<double> RngStream::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re, im};
}

}  // namespace bohrseq
