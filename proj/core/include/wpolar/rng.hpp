// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_RNG_HPP
#define WPOLAR_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace wpolar {

// Philox4x32-10 counter-based generator. A pure function of (key, counter),
// so any (seed, stream, sample, draw) coordinate maps to the same bits no
// matter how work is sharded across threads.
namespace philox {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Counter round_once(const Counter& x, const Key& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x[2];
  const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const auto lo0 = static_cast<std::uint32_t>(p0);
  const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(p1);
  return {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

inline Counter block(Counter ctr, Key key) {
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    ctr = round_once(ctr, key);
  }
  return ctr;
}

}  // namespace philox

/// Identifies an independent random stream: identical (seed, stream_id)
/// always reproduces identical sample sequences.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint32_t stream_id = 0;
};

/// Deterministic draw context for one Monte Carlo sample. Consumes Philox
/// blocks keyed by (seed) with counter (block, sample_lo, sample_hi ^ stream).
class DrawCtx {
 public:
  DrawCtx(RngStream s, std::uint64_t sample_index)
      : key_{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32)},
        base_{0u, static_cast<std::uint32_t>(sample_index),
              static_cast<std::uint32_t>(sample_index >> 32), s.stream_id} {}

  /// Uniform double in the open interval (0,1), 53 usable bits.
  double uniform() {
    refill_if_needed();
    const std::uint64_t hi = buf_[word_++];
    const std::uint64_t lo = buf_[word_++];
    const std::uint64_t u53 = (hi << 21 ^ lo) & ((1ull << 53) - 1);
    return (static_cast<double>(u53) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; draws are cached in pairs.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Bernoulli with success probability p.
  bool bernoulli(double p) { return uniform() < p; }

 private:
  void refill_if_needed() {
    if (word_ + 2 <= buf_.size()) return;
    philox::Counter ctr = base_;
    ctr[0] = block_++;
    buf_ = philox::block(ctr, key_);
    word_ = 0;
  }

  philox::Key key_;
  philox::Counter base_;
  philox::Counter buf_{};
  std::uint32_t block_ = 0;
  std::size_t word_ = 4;  // force refill on first use
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace wpolar

#endif  // WPOLAR_RNG_HPP
