#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "words.hpp"

namespace vtc {

enum class ErrorKind { kNone, kDeletion, kInsertion, kZFlip, kSubstitution, kBurst };

std::string_view to_string(ErrorKind kind);

// Inclusive, 1-based. For deletions the interval indexes the corrected
// codeword (every slot where the restored symbol could have been); for
// insertions it indexes the received word (every symbol whose removal
// restores the codeword); for substitutions lo == hi is the flipped slot.
struct PositionInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  friend bool operator==(const PositionInterval&, const PositionInterval&) = default;
};

template <class W>
struct BasicDecodeOutcome {
  W codeword;
  ErrorKind kind = ErrorKind::kNone;
  // Symbol restored (deletion, substitution) or removed (insertion).
  std::optional<Symbol> value;
  std::optional<PositionInterval> positions;
};

using DecodeOutcome = BasicDecodeOutcome<BinaryWord>;
using QaryDecodeOutcome = BasicDecodeOutcome<QaryWord>;

// Maximal run of equal symbols in w containing pos.
template <Word W>
PositionInterval run_containing(const W& w, std::size_t pos) {
  auto s = w.symbols();
  std::size_t lo = pos, hi = pos;
  while (lo > 1 && s[lo - 2] == s[pos - 1]) --lo;
  while (hi < s.size() && s[hi] == s[pos - 1]) ++hi;
  return {lo, hi};
}

inline QaryDecodeOutcome to_qary(const DecodeOutcome& o) {
  return {QaryWord::from_binary(o.codeword), o.kind, o.value, o.positions};
}

}  // namespace vtc
