#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "decode_outcome.hpp"
#include "words.hpp"

// VT codes taken modulo 2n+1: one insertion, one deletion or one substitution
// is corrected, and the received length says which.
namespace vtc::shifted {

class Params {
 public:
  Params(std::size_t n, std::uint64_t a);

  std::size_t n() const noexcept { return n_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t modulus() const noexcept { return 2 * n_ + 1; }

 private:
  std::size_t n_;
  std::uint64_t a_;
};

enum class Received { kDeletion, kInsertion, kSubstitutionOrClean };

bool is_codeword(const BinaryWord& x, const Params& params);
Received classify(const BinaryWord& y, const Params& params);
DecodeOutcome decode(const BinaryWord& y, const Params& params);
std::vector<BinaryWord> enumerate(const Params& params, const Limits& limits = {});

}  // namespace vtc::shifted
