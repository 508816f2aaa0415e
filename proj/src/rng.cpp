#include "rng.hpp"

namespace vtc {

namespace {

std::uint32_t lo(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
std::uint32_t hi(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_() {
  std::seed_seq seq{lo(seed), hi(seed)};
  engine_.seed(seq);
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{lo(seed), hi(seed), lo(trial), hi(trial), 0x7472U};
  return Rng(seq);
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  // Rejection on the top of the range keeps the result exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

}  // namespace vtc
