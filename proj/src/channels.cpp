#include "channels.hpp"

#include <string>

namespace vtc::channels {

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kIdentity: return "identity";
    case ChannelKind::kBdc: return "bdc";
    case ChannelKind::kSingleDeletion: return "single-deletion";
    case ChannelKind::kSingleInsertion: return "single-insertion";
    case ChannelKind::kSingleSubstitution: return "single-substitution";
    case ChannelKind::kBurst: return "burst";
  }
  return "unknown";
}

ChannelKind parse_channel(std::string_view name) {
  for (auto k : {ChannelKind::kIdentity, ChannelKind::kBdc, ChannelKind::kSingleDeletion,
                 ChannelKind::kSingleInsertion, ChannelKind::kSingleSubstitution, ChannelKind::kBurst}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidArgument("unknown channel '" + std::string(name) + "'");
}

void validate(const ChannelSpec& spec) {
  if (spec.kind == ChannelKind::kBdc && !(spec.alpha >= 0.0 && spec.alpha <= 1.0)) {
    throw InvalidArgument("bdc deletion probability must be in [0, 1]");
  }
  if (spec.kind == ChannelKind::kBurst && spec.s < 1) throw InvalidArgument("burst length must be >= 1");
}

QaryWord transmit(const QaryWord& x, const ChannelSpec& spec, Rng& rng) {
  validate(spec);
  const std::size_t n = x.size();
  switch (spec.kind) {
    case ChannelKind::kIdentity:
      return x;
    case ChannelKind::kBdc: {
      std::vector<Symbol> kept;
      for (Symbol s : x.symbols()) {
        if (!rng.bernoulli(spec.alpha)) kept.push_back(s);
      }
      return x.with_symbols(std::move(kept));
    }
    case ChannelKind::kSingleDeletion:
      if (n == 0) throw InvalidArgument("cannot delete from an empty word");
      return x.with_deleted(1 + rng.uniform(n));
    case ChannelKind::kSingleInsertion: {
      const auto pos = 1 + rng.uniform(n + 1);
      return x.with_inserted(pos, static_cast<Symbol>(rng.uniform(x.alphabet())));
    }
    case ChannelKind::kSingleSubstitution: {
      if (n == 0) throw InvalidArgument("cannot substitute in an empty word");
      const auto pos = 1 + rng.uniform(n);
      std::vector<Symbol> v(x.symbols().begin(), x.symbols().end());
      // Any symbol except the current one, uniformly.
      const auto shift = 1 + rng.uniform(x.alphabet() - 1);
      v[pos - 1] = static_cast<Symbol>((v[pos - 1] + shift) % x.alphabet());
      return x.with_symbols(std::move(v));
    }
    case ChannelKind::kBurst: {
      if (spec.s > n) throw InvalidArgument("burst longer than the word");
      const auto start = rng.uniform(n - spec.s + 1);
      std::vector<Symbol> v(x.symbols().begin(), x.symbols().begin() + static_cast<std::ptrdiff_t>(start));
      v.insert(v.end(), x.symbols().begin() + static_cast<std::ptrdiff_t>(start + spec.s), x.symbols().end());
      return x.with_symbols(std::move(v));
    }
  }
  throw InvalidArgument("unknown channel kind");
}

QaryWord transmit(const QaryWord& x, const ChannelSpec& spec, std::uint64_t trial) {
  Rng rng = Rng::for_trial(spec.seed, trial);
  return transmit(x, spec, rng);
}

TrialReport run_experiment(const Codec& codec, ChannelSpec spec, std::uint64_t trials, std::uint64_t seed,
                           std::size_t max_transcripts) {
  validate(spec);
  spec.seed = seed;
  if (codec.length() == 0) throw InvalidArgument("run_experiment: codec needs a fixed block length");
  if (spec.kind == ChannelKind::kBurst && spec.s > codec.length()) {
    throw InvalidArgument("run_experiment: burst longer than the block length");
  }
  TrialReport report;
  report.trials = trials;
  report.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    const QaryWord x = codec.sample(rng);
    const QaryWord y = transmit(x, spec, rng);
    std::string error;
    std::optional<QaryDecodeOutcome> outcome;
    try {
      outcome = codec.decode(y);
    } catch (const CorruptInput& e) {
      error = e.what();
    }
    if (outcome && outcome->codeword == x) {
      ++report.successes;
      ++report.outcome_kinds[std::string(to_string(outcome->kind))];
      continue;
    }
    ++report.failures;
    if (report.transcripts.size() < max_transcripts) {
      report.transcripts.push_back(
          {t, x.to_string(), y.to_string(), outcome ? outcome->codeword.to_string() : std::string{}, error});
    }
  }
  return report;
}

QaryWord repetition_encode(const QaryWord& x, std::size_t r) {
  if (r < 1) throw InvalidArgument("repetition factor must be >= 1");
  std::vector<Symbol> out;
  out.reserve(x.size() * r);
  for (Symbol s : x.symbols()) out.insert(out.end(), r, s);
  return x.with_symbols(std::move(out));
}

QaryWord repetition_decode(const QaryWord& y, std::size_t r, std::optional<std::size_t> expected_length) {
  if (r < 1) throw InvalidArgument("repetition factor must be >= 1");
  std::vector<Symbol> out;
  std::size_t restored = 0;
  for (const auto& run : runs(y)) {
    const std::size_t copies = (run.length + r - 1) / r;
    restored += copies * r - run.length;
    out.insert(out.end(), copies, run.value);
  }
  if (restored > r - 1) {
    throw CorruptInput("repetition_decode: " + std::to_string(restored) + " missing symbols exceed r - 1");
  }
  if (expected_length && out.size() != *expected_length) {
    throw CorruptInput("repetition_decode: decoded length " + std::to_string(out.size()) + ", expected " +
                       std::to_string(*expected_length));
  }
  return y.with_symbols(std::move(out));
}

}  // namespace vtc::channels
