#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "decode_outcome.hpp"
#include "words.hpp"

// Binary Varshamov-Tenengolts codes VT_a(n) = { x : sum i*x_i = a mod (n+1) }.
namespace vtc::vt {

class Params {
 public:
  Params(std::size_t n, std::uint64_t a);

  std::size_t n() const noexcept { return n_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t modulus() const noexcept { return n_ + 1; }

 private:
  std::size_t n_;
  std::uint64_t a_;
};

struct Syndrome {
  std::size_t weight;      // ones in the received word
  std::uint64_t residue;   // (a - sum i*y_i) mod m, always in [0, m)
};

/// Weighted sum of the 1-based positions holding a 1, reduced mod m.
std::uint64_t weighted_sum(const BinaryWord& x, std::uint64_t m);

std::uint64_t checksum(const BinaryWord& x, const Params& params);
bool is_codeword(const BinaryWord& x, const Params& params);
Syndrome syndrome(const BinaryWord& y, std::uint64_t a, std::uint64_t m);

/// Levenshtein's single-deletion decoder. Takes a word of length n-1.
DecodeOutcome decode_deletion(const BinaryWord& y, const Params& params);
/// Corrects at most one 1->0 flip in a word of length n.
DecodeOutcome decode_z_channel(const BinaryWord& received, const Params& params);
/// Corrects one inserted symbol in a word of length n+1.
DecodeOutcome decode_insertion(const BinaryWord& y, const Params& params);

std::size_t parity_count(std::size_t n);
std::size_t data_length(std::size_t n);
bool is_parity_position(std::size_t pos);

/// Data fills the non-power-of-two positions in order; positions 1, 2, 4, ...
/// carry the binary expansion of the residue that completes the checksum.
BinaryWord systematic_encode(const BinaryWord& data, const Params& params);
BinaryWord systematic_decode(const BinaryWord& x);

/// Members of VT_a(n) in lexicographic order.
std::vector<BinaryWord> enumerate(const Params& params, const Limits& limits = {});

/// Lexicographic ranking of { x in {0,1}^n : sum i*x_i = a mod m }, used to
/// encode integers into codes that lack a systematic encoder.
class Indexer {
 public:
  Indexer(std::size_t n, std::uint64_t a, std::uint64_t m);

  std::uint64_t size() const noexcept { return size_; }
  BinaryWord encode(std::uint64_t index) const;
  std::uint64_t index_of(const BinaryWord& x) const;

 private:
  std::size_t n_;
  std::uint64_t a_;
  std::uint64_t m_;
  // completions_[filled * m + residue]: ways to finish from that state.
  std::vector<std::uint64_t> completions_;
  std::uint64_t size_ = 0;
};

// The deletion and insertion rules work for any modulus m >= n+1 (the shifted
// code uses m = 2n+1). These are the shared implementations.
namespace detail {
DecodeOutcome decode_deletion(const BinaryWord& y, std::size_t n, std::uint64_t a, std::uint64_t m);
DecodeOutcome decode_insertion(const BinaryWord& y, std::size_t n, std::uint64_t a, std::uint64_t m);
}  // namespace detail

}  // namespace vtc::vt
