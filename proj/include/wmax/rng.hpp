#pragma once

#include <cstdint>

namespace wmax {

// Stateless counter-based generator: draw i of stream s under seed k is a
// fixed mix of (k, s, i), so parallel and serial consumers produce identical
// streams no matter how work is scheduled.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  // Uniform in [0, 1), 53-bit resolution.
  double uniform();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace wmax
