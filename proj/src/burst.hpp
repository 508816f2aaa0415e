#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "words.hpp"

// Codes correcting one burst of exactly s consecutive deletions: s VT
// codewords of length k interleaved symbol by symbol.
namespace vtc::burst {

class Params {
 public:
  /// Empty residues means all zero.
  Params(std::size_t s, std::size_t k, std::vector<std::uint64_t> residues = {});

  std::size_t depth() const noexcept { return s_; }
  std::size_t row_length() const noexcept { return k_; }
  std::size_t n() const noexcept { return s_ * k_; }
  const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }

 private:
  std::size_t s_;
  std::size_t k_;
  std::vector<std::uint64_t> residues_;
};

/// Row r occupies positions r, r+s, r+2s, ...
BinaryWord interleave(const std::vector<BinaryWord>& rows);
std::vector<BinaryWord> deinterleave(const BinaryWord& x, std::size_t s);

BinaryWord encode(const std::vector<BinaryWord>& rows, const Params& params);
/// Each block goes through the VT systematic encoder of its row first.
BinaryWord encode_systematic(const std::vector<BinaryWord>& blocks, const Params& params);
std::vector<BinaryWord> decode_systematic(const BinaryWord& codeword, const Params& params);
std::size_t data_length(const Params& params);

bool is_codeword(const BinaryWord& x, const Params& params);

/// Input must be exactly n - s long; anything else was not a single s-burst.
BinaryWord decode_burst(const BinaryWord& y, const Params& params);

std::vector<BinaryWord> enumerate(const Params& params, const Limits& limits = {});

}  // namespace vtc::burst
