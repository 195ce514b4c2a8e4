#pragma once

#include <cstdint>
#include <limits>

namespace basla {

__extension__ typedef unsigned __int128 uint128;

/// PCG-XSL-RR 128/64 with selectable stream. Period 2^128 per stream;
/// streams with distinct increments are independent sequences.
class Pcg64 {
 public:
  using result_type = std::uint64_t;

  Pcg64(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Advance the state by `delta` steps in O(log delta).
  void discard(uint128 delta);

 private:
  uint128 state_;
  uint128 increment_;
};

}  // namespace basla
