#include "gammapair/rng.hpp"

namespace gammapair {
namespace {

constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kBump0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kBump1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b,
                             std::uint64_t& hi) {
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  hi = static_cast<std::uint64_t>(prod >> 64);
  return static_cast<std::uint64_t>(prod);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_{seed, stream_id},
      counter_{0, 0, 0, 0},
      buffer_{0, 0, 0, 0},
      buffer_pos_(4),
      draws_(0) {}

void RngStream::refill() {
  // The 256-bit block counter advances before each block, so the first
  // block is produced from counter value 1 (matching numpy, which bumps
  // the counter ahead of every generation call).
  if (++counter_[0] == 0 && ++counter_[1] == 0 && ++counter_[2] == 0) {
    ++counter_[3];
  }

  std::array<std::uint64_t, 4> c = counter_;
  std::uint64_t k0 = key_[0];
  std::uint64_t k1 = key_[1];
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k0 += kBump0;
      k1 += kBump1;
    }
    std::uint64_t hi0, hi1;
    const std::uint64_t lo0 = mulhilo(kMult0, c[0], hi0);
    const std::uint64_t lo1 = mulhilo(kMult1, c[2], hi1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
  }
  buffer_ = c;
  buffer_pos_ = 0;
}

std::uint64_t RngStream::next_u64() {
  if (buffer_pos_ == 4) refill();
  ++draws_;
  return buffer_[buffer_pos_++];
}

double RngStream::next_uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

RngStream substream(std::uint64_t seed, std::uint64_t stream_id) {
  return RngStream(seed, stream_id);
}

}  // namespace gammapair
