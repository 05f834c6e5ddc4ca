#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace norts {

/**
 * @brief Counter-based random stream (Philox4x32-10).
 *
 * The 64-bit seed is the cipher key and the stream id occupies the upper half of
 * the 128-bit counter, so every (seed, stream_id) pair addresses its own
 * sequence. Output is identical on every platform. Independent sub-streams for
 * parallel work come from split(), which never touches the parent's position.
 */
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed = 0, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();

  /// Child stream number `index`; deterministic in (seed, stream_id, index).
  RngStream split(std::uint64_t index) const;

  // UniformRandomBitGenerator surface.
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next_u64(); }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 2> block_{};
  int available_ = 0;
};

/// SplitMix64 finalizer; used for seed derivation.
std::uint64_t mix64(std::uint64_t x);

}  // namespace norts
