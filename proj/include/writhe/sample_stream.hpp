#pragma once

#include <cstdint>
#include <random>

namespace writhe {

/// Seedable, splittable random source.
///
/// A stream is identified by (seed, stream_id); equal identities replay the
/// same sequence bit for bit on any platform. Distinct stream ids from one
/// seed give independent streams. All variate transforms are implemented
/// here rather than through <random> distributions, whose algorithms are
/// implementation-defined.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Independent stream sharing this seed.
  SampleStream substream(std::uint64_t stream_id) const { return SampleStream(seed_, stream_id); }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();

  /// Uniform on {0, ..., bound-1} with no modulo bias. bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);

  double standard_normal();

  double exponential();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace writhe
