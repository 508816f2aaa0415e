#pragma once

#include <cstdint>
#include <random>

namespace vtc {

// mt19937_64 and seed_seq are specified bit-for-bit by the standard; the
// distributions below are hand-written because the std:: ones are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream for one trial of a seeded run.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit();
  bool bernoulli(double p) { return unit() < p; }

 private:
  explicit Rng(std::seed_seq& seq) : engine_(seq) {}
  std::mt19937_64 engine_;
};

}  // namespace vtc
