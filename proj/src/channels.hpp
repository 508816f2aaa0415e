#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codec.hpp"
#include "rng.hpp"
#include "words.hpp"

namespace vtc::channels {

enum class ChannelKind { kIdentity, kBdc, kSingleDeletion, kSingleInsertion, kSingleSubstitution, kBurst };

std::string_view to_string(ChannelKind kind);
ChannelKind parse_channel(std::string_view name);

struct ChannelSpec {
  ChannelKind kind = ChannelKind::kIdentity;
  double alpha = 0.0;   // deletion probability, bdc only
  std::size_t s = 1;    // burst length, burst only
  std::uint64_t seed = 0;
};

void validate(const ChannelSpec& spec);

/// Applies the channel using the caller's generator. Single-edit channels
/// pick the position (and inserted or replacement symbol) uniformly.
QaryWord transmit(const QaryWord& x, const ChannelSpec& spec, Rng& rng);
/// Deterministic in (x, spec, trial).
QaryWord transmit(const QaryWord& x, const ChannelSpec& spec, std::uint64_t trial);

struct Transcript {
  std::uint64_t trial = 0;
  std::string input;
  std::string output;
  std::string decoded;  // empty when decoding raised an error
  std::string error;
};

struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> outcome_kinds;  // successful decodes by diagnosed error kind
  std::vector<Transcript> transcripts;                 // first failures, by trial index

  double success_rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / trials; }
};

inline constexpr std::size_t kMaxTranscripts = 100;

/// Each trial draws a codeword, sends it through the channel and decodes.
/// Trial t uses Rng::for_trial(seed, t) for both steps.
TrialReport run_experiment(const Codec& codec, ChannelSpec spec, std::uint64_t trials, std::uint64_t seed,
                           std::size_t max_transcripts = kMaxTranscripts);

/// Each symbol repeated r times.
QaryWord repetition_encode(const QaryWord& x, std::size_t r);
/// Rounds every run up to a multiple of r. Rejects input that would need
/// more than r - 1 restored symbols, or that decodes to a length other than
/// expected_length when one is given.
QaryWord repetition_decode(const QaryWord& y, std::size_t r, std::optional<std::size_t> expected_length = {});

}  // namespace vtc::channels
