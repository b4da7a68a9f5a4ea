#pragma once

#include <cstdint>
#include <limits>
#include <span>

namespace nia {

/// Deterministic random stream: xoshiro256** whose 256-bit state is filled
/// by four SplitMix64 outputs started from `mix64(seed + mix64(stream_id))`.
///
/// Every derived draw (uniform reals, bounded integers, normals, shuffles) is
/// implemented here rather than through <random> distributions, so a stream
/// is reproducible bit-for-bit on any platform and portable to other
/// languages from this description alone:
///   - uniform():     (next() >> 11) * 2^-53
///   - below(n):      Lemire's multiply-shift with rejection
///   - normal():      Box-Muller, cosine branch, u1 = 1 - uniform()
class Rng {
 public:
  using result_type = std::uint64_t;

  Rng(std::uint64_t seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next(); }

  std::uint64_t next();

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform integer in [lo, hi] (inclusive).
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool bernoulli(double p);
  /// Standard normal draw.
  double normal();

  /// Fisher-Yates, from the back.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t s_[4];
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Independent stream `stream_id` of the generator seeded with `seed`.
inline Rng rng_stream(std::uint64_t seed, std::uint64_t stream_id) { return Rng(seed, stream_id); }

}  // namespace nia
