#pragma once

#include <array>
#include <cstdint>

namespace gammapair {

// Counter-based generator: Philox-4x64 with 10 rounds (Salmon, Moraes,
// Dror, Shaw; SC'11). The key is (seed, stream_id), so every (seed, id)
// pair names an independent sequence and parallel substreams never need
// coordination. Output is word-for-word identical to
// numpy.random.Philox(counter=0, key=[seed, stream_id]), which makes the
// stream easy to cross-check from Python.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return key_[0]; }
  std::uint64_t stream_id() const { return key_[1]; }

  // Next raw 64-bit word.
  std::uint64_t next_u64();

  // Uniform on the open interval (0,1): ((word >> 11) + 0.5) * 2^-53.
  // Never exactly 0 or 1, so -log(u) and log1p(-u) stay finite.
  double next_uniform();

  // Number of words handed out so far. Samplers advertise their draw
  // budget in terms of this counter.
  std::uint64_t draws_taken() const { return draws_; }

 private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> buffer_;
  int buffer_pos_;
  std::uint64_t draws_;
};

// Stream addressed by (seed, stream_id). Pure: equal arguments always give
// an identical stream, on any platform.
RngStream substream(std::uint64_t seed, std::uint64_t stream_id);

}  // namespace gammapair
