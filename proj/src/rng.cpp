#include "basla/rng.hpp"

namespace basla {

namespace {

constexpr uint128 kMultiplier =
    (static_cast<uint128>(2549297995355413924ULL) << 64) |
    4865540595714422341ULL;

}  // namespace

Pcg64::Pcg64(std::uint64_t seed, std::uint64_t stream)
    : state_(0), increment_((static_cast<uint128>(stream) << 1) | 1u) {
  (*this)();
  state_ += seed;
  (*this)();
}

Pcg64::result_type Pcg64::operator()() {
  state_ = state_ * kMultiplier + increment_;
  const auto hi = static_cast<std::uint64_t>(state_ >> 64);
  const auto lo = static_cast<std::uint64_t>(state_);
  const unsigned rot = static_cast<unsigned>(state_ >> 122);
  const std::uint64_t x = hi ^ lo;
  return (x >> rot) | (x << ((64u - rot) & 63u));
}

double Pcg64::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

void Pcg64::discard(uint128 delta) {
  // Brown's log-time LCG jump-ahead.
  uint128 acc_mult = 1;
  uint128 acc_plus = 0;
  uint128 cur_mult = kMultiplier;
  uint128 cur_plus = increment_;
  while (delta > 0) {
    if (delta & 1) {
      acc_mult *= cur_mult;
      acc_plus = acc_plus * cur_mult + cur_plus;
    }
    cur_plus = (cur_mult + 1) * cur_plus;
    cur_mult *= cur_mult;
    delta >>= 1;
  }
  state_ = acc_mult * state_ + acc_plus;
}

}  // namespace basla
