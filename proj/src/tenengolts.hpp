#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "decode_outcome.hpp"
#include "words.hpp"

// Tenengolts' q-ary single-deletion codes. A word belongs to C(n, q, a, b)
// when its monotonicity indicator alpha satisfies sum (i-1)*alpha_i = a mod n
// and its symbols sum to b mod q.
namespace vtc::tenengolts {

class Params {
 public:
  Params(std::size_t n, unsigned q, std::uint64_t a, std::uint64_t b);

  std::size_t n() const noexcept { return n_; }
  unsigned q() const noexcept { return q_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }

 private:
  std::size_t n_;
  unsigned q_;
  std::uint64_t a_;
  std::uint64_t b_;
};

/// alpha_i = [x_i >= x_{i-1}] for i = 2..n, stored at index i-1.
BinaryWord alpha_sequence(const QaryWord& x);
std::uint64_t alpha_checksum(const QaryWord& x);

bool is_codeword(const QaryWord& x, const Params& params);

/// Value from the symbol sum, alpha from the binary VT decoder, then the one
/// slot whose local comparisons reproduce alpha. Linear time.
QaryDecodeOutcome decode_deletion(const QaryWord& y, const Params& params);
/// Tries every slot for the restored value and keeps codewords. Quadratic;
/// kept as the cross-check for decode_deletion.
QaryDecodeOutcome decode_deletion_reference(const QaryWord& y, const Params& params);
QaryDecodeOutcome decode_insertion(const QaryWord& y, const Params& params);

/// Lexicographic order, 0 < 1 < ... < q-1.
std::vector<QaryWord> enumerate(const Params& params, const Limits& limits = {});

/// Counting-based ranking over the lexicographic order of codewords.
class Indexer {
 public:
  explicit Indexer(const Params& params);

  std::uint64_t size() const noexcept { return size_; }
  QaryWord encode(std::uint64_t index) const;
  std::uint64_t index_of(const QaryWord& codeword) const;

 private:
  std::uint64_t completions(std::size_t filled, Symbol last, std::uint64_t alpha_sum, std::uint64_t symbol_sum) const;

  Params params_;
  // completions_[((filled * q + last) * n + alpha_sum) * q + symbol_sum]
  std::vector<std::uint64_t> completions_;
  std::uint64_t size_ = 0;
};

QaryWord encode_by_index(std::uint64_t index, const Params& params);
std::uint64_t decode_to_index(const QaryWord& codeword, const Params& params);

}  // namespace vtc::tenengolts
