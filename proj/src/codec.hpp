#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "decode_outcome.hpp"
#include "rng.hpp"
#include "words.hpp"

namespace vtc {

enum class CodeFamily { kVt, kShiftedVt, kTenengolts, kBurst, kRepetition };

std::string_view to_string(CodeFamily family);
CodeFamily parse_family(std::string_view name);

// Flat parameter record. Which fields matter depends on the family:
//   vt, shifted-vt: n, a        tenengolts: n, q, a, b
//   burst: s, k, residues       repetition: r, q, n (message length, 0 = any)
struct CodecConfig {
  CodeFamily family = CodeFamily::kVt;
  std::size_t n = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  unsigned q = 2;
  std::size_t s = 1;
  std::size_t k = 0;
  std::size_t r = 2;
  std::vector<std::uint64_t> residues;
};

/// One code family behind a common interface. Words are carried as QaryWord
/// (q = 2 for the binary families).
class Codec {
 public:
  virtual ~Codec() = default;

  virtual CodeFamily family() const = 0;
  virtual unsigned alphabet() const = 0;
  /// Codeword length; 0 for a repetition code without a fixed message length.
  virtual std::size_t length() const = 0;
  virtual unsigned data_alphabet() const { return 2; }
  /// Data word length accepted by encode; 0 means any length.
  virtual std::size_t data_length() const = 0;

  virtual QaryWord encode(const QaryWord& data) const = 0;
  /// Classifies the error by received length and corrects it.
  virtual QaryDecodeOutcome decode(const QaryWord& received) const = 0;
  virtual bool is_codeword(const QaryWord& word) const = 0;
  virtual std::vector<QaryWord> enumerate(const Limits& limits) const = 0;
  /// A random codeword; uniform over the code wherever an index encoder exists.
  virtual QaryWord sample(Rng& rng) const = 0;

  const CodecConfig& config() const noexcept { return config_; }

 protected:
  explicit Codec(CodecConfig config) : config_(std::move(config)) {}

 private:
  CodecConfig config_;
};

std::unique_ptr<Codec> make_codec(const CodecConfig& config);

}  // namespace vtc
