#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "gammapair/rng.hpp"
#include "gammapair/stats.hpp"
#include "reference_values.hpp"

using gammapair::RngStream;
using gammapair::substream;

TEST_CASE("known-answer vectors match the numpy Philox bit generator") {
  for (const auto& vec : refvals::kPhiloxVectors) {
    RngStream stream(vec.seed, vec.stream_id);
    for (std::size_t i = 0; i < vec.words.size(); ++i) {
      INFO("seed=", vec.seed, " stream=", vec.stream_id, " word ", i);
      CHECK(stream.next_u64() == vec.words[i]);
    }
  }
}

TEST_CASE("equal keys reproduce the identical sequence") {
  RngStream a(42, 0);
  RngStream b(42, 0);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct stream ids give distinct sequences") {
  RngStream a(1, 0);
  RngStream b(1, 1);
  int collisions = 0;
  for (int i = 0; i < 10000; ++i) {
    if (a.next_u64() == b.next_u64()) ++collisions;
  }
  CHECK(collisions == 0);
}

TEST_CASE("uniforms stay strictly inside (0, 1)") {
  RngStream stream(7, 0);
  double lo = 1.0;
  double hi = 0.0;
  for (int i = 0; i < 10000000; ++i) {
    const double u = stream.next_uniform();
    if (u < lo) lo = u;
    if (u > hi) hi = u;
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
}

TEST_CASE("uniform mean settles near one half") {
  RngStream stream(3, 0);
  double sum = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) sum += stream.next_uniform();
  CHECK(std::fabs(sum / n - 0.5) < 0.002);
}

TEST_CASE("the uniform map is ((word >> 11) + 0.5) * 2^-53") {
  RngStream raw(99, 4);
  RngStream mapped(99, 4);
  for (int i = 0; i < 256; ++i) {
    const double expected =
        (static_cast<double>(raw.next_u64() >> 11) + 0.5) * 0x1.0p-53;
    CHECK(mapped.next_uniform() == expected);
  }
}

TEST_CASE("parallel substreams are uncorrelated in the large") {
  RngStream a = substream(11, 0);
  RngStream b = substream(11, 1);
  gammapair::SummaryStats stats;
  for (int i = 0; i < 100000; ++i) {
    stats.add(a.next_uniform(), b.next_uniform());
  }
  CHECK(std::fabs(stats.corr()) < 0.01);
}

TEST_CASE("draws_taken counts every word handed out") {
  RngStream stream(5, 0);
  CHECK(stream.draws_taken() == 0);
  stream.next_u64();
  CHECK(stream.draws_taken() == 1);
  for (int i = 0; i < 9; ++i) stream.next_uniform();
  CHECK(stream.draws_taken() == 10);
}
