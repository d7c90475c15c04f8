#pragma once

#include <cstdint>
#include <initializer_list>

namespace cstar {

// Counter-based generator. The bit stream is fixed by contract so that runs
// are reproducible across platforms and thread schedules:
//
//   state_0   = mix(seed); state_{n+1} = mix(state_n ^ stream_n)
//   output_i  = mix(state + (i+1) * 0x9e3779b97f4a7c15)
//
// where mix is the splitmix64 finalizer. Uniform doubles take the top 53 bits.
class CounterRng {
 public:
  static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;

  static uint64_t mix(uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  explicit CounterRng(uint64_t seed, std::initializer_list<uint64_t> stream = {}) {
    base_ = mix(seed);
    for (uint64_t s : stream) base_ = mix(base_ ^ s);
  }

  // Derive an independent generator for a named subtask.
  CounterRng fork(uint64_t a, uint64_t b = 0) const { return CounterRng(base_, {a, b}); }

  uint64_t next_u64() { return mix(base_ + (++counter_) * kGolden); }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  // Uniform in {0, ..., n-1}; n > 0.
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

 private:
  CounterRng(uint64_t base, std::initializer_list<uint64_t> stream) : base_(base) {
    for (uint64_t s : stream) base_ = mix(base_ ^ s);
  }

  uint64_t base_ = 0;
  uint64_t counter_ = 0;
};

}  // namespace cstar
