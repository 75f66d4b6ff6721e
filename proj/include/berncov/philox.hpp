#pragma once

#include <array>
#include <cstdint>

namespace berncov {

// Philox4x32-10 counter-based block function (Salmon et al., SC'11). Chosen
// as the randomness source because it is a fixed published algorithm with
// known-answer vectors: equal (counter, key) inputs give bit-identical
// outputs on every platform, which makes reproducibility testable.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static Counter block(Counter counter, Key key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t product0 = std::uint64_t{kMul0} * counter[0];
      const std::uint64_t product1 = std::uint64_t{kMul1} * counter[2];
      counter = {static_cast<std::uint32_t>(product1 >> 32) ^ counter[1] ^ key[0],
                 static_cast<std::uint32_t>(product1),
                 static_cast<std::uint32_t>(product0 >> 32) ^ counter[3] ^ key[1],
                 static_cast<std::uint32_t>(product0)};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return counter;
  }
};

// Word stream over consecutive Philox blocks for one (seed, stream) pair.
// The 64-bit seed forms the key; the 64-bit stream id occupies the high
// counter words and the running block index the low ones, so distinct
// streams never overlap. The sampler keys one stream per sampled vector,
// which makes a batch a function of (seed, vector index) alone.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_lo_(static_cast<std::uint32_t>(stream_id)),
        stream_hi_(static_cast<std::uint32_t>(stream_id >> 32)) {}

  std::uint32_t next_u32() {
    if (position_ == 4) {
      buffer_ = Philox4x32::block({static_cast<std::uint32_t>(block_),
                                   static_cast<std::uint32_t>(block_ >> 32),
                                   stream_lo_, stream_hi_},
                                  key_);
      ++block_;
      position_ = 0;
    }
    return buffer_[position_++];
  }

  /// The next 128 bits of the stream, in stream order.
  std::array<std::uint32_t, 4> next_words() {
    std::array<std::uint32_t, 4> words;
    for (auto& w : words) w = next_u32();
    return words;
  }

  /// Uniform draw from {0, ..., bound-1}, unbiased via rejection. A bound
  /// of 1 consumes no words.
  std::uint32_t next_below(std::uint32_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t full = std::uint64_t{1} << 32;
    const std::uint64_t limit = full - full % bound;
    std::uint32_t word;
    do {
      word = next_u32();
    } while (word >= limit);
    return word % bound;
  }

 private:
  Philox4x32::Key key_;
  std::uint32_t stream_lo_;
  std::uint32_t stream_hi_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int position_ = 4;
};

}  // namespace berncov
