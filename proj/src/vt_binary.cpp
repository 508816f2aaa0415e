#include "vt_binary.hpp"

#include <bit>
#include <string>

namespace vtc::vt {

Params::Params(std::size_t n, std::uint64_t a) : n_(n), a_(a) {
  if (n < 1) throw InvalidArgument("VT block length must be >= 1");
  if (a > n) throw InvalidArgument("VT residue a=" + std::to_string(a) + " outside [0, " + std::to_string(n) + "]");
}

std::uint64_t weighted_sum(const BinaryWord& x, std::uint64_t m) {
  std::uint64_t sum = 0;
  auto s = x.symbols();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) sum += i + 1;
  }
  return sum % m;
}

namespace {

void require_length(const BinaryWord& w, std::size_t expected, const char* what) {
  if (w.size() != expected) {
    throw InvalidArgument(std::string(what) + ": expected length " + std::to_string(expected) + ", got " +
                          std::to_string(w.size()));
  }
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return (a % m + m - b % m) % m; }

}  // namespace

std::uint64_t checksum(const BinaryWord& x, const Params& params) {
  require_length(x, params.n(), "checksum");
  return weighted_sum(x, params.modulus());
}

bool is_codeword(const BinaryWord& x, const Params& params) { return checksum(x, params) == params.a(); }

Syndrome syndrome(const BinaryWord& y, std::uint64_t a, std::uint64_t m) {
  return {y.weight(), sub_mod(a, weighted_sum(y, m), m)};
}

namespace detail {

DecodeOutcome decode_deletion(const BinaryWord& y, std::size_t n, std::uint64_t a, std::uint64_t m) {
  require_length(y, n - 1, "decode_deletion");
  const auto [w, s] = syndrome(y, a, m);
  const auto bits = y.symbols();
  std::size_t pos = 0;  // slot of the restored symbol in the codeword
  Symbol value = 0;
  if (s <= w) {
    // A 0 was deleted with exactly s ones to its right: take the rightmost slot.
    std::size_t ones = 0;
    pos = n;
    while (ones < s) {
      if (bits[pos - 2]) ++ones;
      --pos;
    }
  } else {
    // A 1 was deleted with s - w - 1 zeros to its left: take the leftmost slot.
    const std::uint64_t zeros_left = s - w - 1;
    if (zeros_left > (n - 1) - w) throw CorruptInput("decode_deletion: syndrome inconsistent with one deletion");
    value = 1;
    std::size_t zeros = 0;
    pos = 1;
    while (zeros < zeros_left) {
      if (!bits[pos - 1]) ++zeros;
      ++pos;
    }
  }
  BinaryWord x = y.with_inserted(pos, value);
  if (weighted_sum(x, m) != a % m) throw CorruptInput("decode_deletion: no codeword within one deletion");
  return {x, ErrorKind::kDeletion, value, run_containing(x, pos)};
}

DecodeOutcome decode_insertion(const BinaryWord& y, std::size_t n, std::uint64_t a, std::uint64_t m) {
  require_length(y, n + 1, "decode_insertion");
  const auto bits = y.symbols();
  const std::size_t w = y.weight();
  const std::size_t z = (n + 1) - w;
  // Removing symbol c at slot p lowers the weighted sum by c*p + (ones right of p).
  // For c = 0 that excess is R1 in [0, w]; for c = 1 it is w + L0 with L0 in [0, z].
  const std::uint64_t t = sub_mod(weighted_sum(y, m), a, m);

  auto try_remove = [&](std::size_t p) -> std::optional<DecodeOutcome> {
    BinaryWord x = y.with_deleted(p);
    if (weighted_sum(x, m) != a % m) return std::nullopt;
    return DecodeOutcome{x, ErrorKind::kInsertion, bits[p - 1], run_containing(y, p)};
  };

  for (std::uint64_t r = t; r <= w; r += m) {
    // A 0 with exactly r ones to its right.
    std::size_t ones = 0;
    for (std::size_t p = n + 1; p >= 1; --p) {
      if (bits[p - 1]) {
        if (++ones > r) break;
      } else if (ones == r) {
        if (auto o = try_remove(p)) return *o;
        break;
      }
    }
  }
  for (std::uint64_t excess = t; excess <= w + z; excess += m) {
    if (excess < w) continue;
    // A 1 with exactly excess - w zeros to its left.
    const std::size_t want = excess - w;
    std::size_t zeros = 0;
    for (std::size_t p = 1; p <= n + 1; ++p) {
      if (!bits[p - 1]) {
        if (++zeros > want) break;
      } else if (zeros == want) {
        if (auto o = try_remove(p)) return *o;
        break;
      }
    }
  }
  throw CorruptInput("decode_insertion: no codeword within one insertion");
}

}  // namespace detail

DecodeOutcome decode_deletion(const BinaryWord& y, const Params& params) {
  return detail::decode_deletion(y, params.n(), params.a(), params.modulus());
}

DecodeOutcome decode_insertion(const BinaryWord& y, const Params& params) {
  return detail::decode_insertion(y, params.n(), params.a(), params.modulus());
}

DecodeOutcome decode_z_channel(const BinaryWord& received, const Params& params) {
  require_length(received, params.n(), "decode_z_channel");
  const auto s = syndrome(received, params.a(), params.modulus()).residue;
  if (s == 0) return {received, ErrorKind::kNone, std::nullopt, std::nullopt};
  const auto j = static_cast<std::size_t>(s);
  if (received.at(j) != 0) throw CorruptInput("decode_z_channel: not a single 1->0 flip");
  return {received.with_flipped(j), ErrorKind::kZFlip, Symbol{1}, PositionInterval{j, j}};
}

bool is_parity_position(std::size_t pos) { return std::has_single_bit(pos); }

std::size_t parity_count(std::size_t n) { return static_cast<std::size_t>(std::bit_width(n)); }

std::size_t data_length(std::size_t n) { return n - parity_count(n); }

BinaryWord systematic_encode(const BinaryWord& data, const Params& params) {
  const std::size_t n = params.n();
  require_length(data, data_length(n), "systematic_encode");
  std::vector<Symbol> x(n, 0);
  std::size_t next = 0;
  for (std::size_t pos = 1; pos <= n; ++pos) {
    if (!is_parity_position(pos)) x[pos - 1] = data.symbols()[next++];
  }
  BinaryWord partial(std::move(x));
  const std::uint64_t m = params.modulus();
  // Parity positions are 1, 2, 4, ..., so any residue in [0, n] is their sum
  // for the bits of its binary expansion.
  const std::uint64_t need = sub_mod(params.a(), weighted_sum(partial, m), m);
  std::vector<Symbol> out(partial.symbols().begin(), partial.symbols().end());
  for (std::size_t pos = 1; pos <= n; pos <<= 1) out[pos - 1] = (need & pos) ? 1 : 0;
  BinaryWord result(std::move(out));
  if (!is_codeword(result, params)) throw InternalError("systematic_encode produced a non-codeword");
  return result;
}

BinaryWord systematic_decode(const BinaryWord& x) {
  std::vector<Symbol> data;
  data.reserve(data_length(x.size()));
  for (std::size_t pos = 1; pos <= x.size(); ++pos) {
    if (!is_parity_position(pos)) data.push_back(x.symbols()[pos - 1]);
  }
  return BinaryWord(std::move(data));
}

std::vector<BinaryWord> enumerate(const Params& params, const Limits& limits) {
  const std::size_t n = params.n();
  check_length_cap(n, limits, "vt::enumerate");
  std::vector<BinaryWord> out;
  const std::uint64_t m = params.modulus();
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    // Bit i (from the low end) sits at position n - i.
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((v >> i) & 1U) sum += n - i;
    }
    if (sum % m == params.a()) out.push_back(BinaryWord::from_integer(v, n));
  }
  return out;
}

Indexer::Indexer(std::size_t n, std::uint64_t a, std::uint64_t m) : n_(n), a_(a), m_(m) {
  if (n > 62) throw ResourceLimit("vt::Indexer: n > 62");
  if (m < 1 || m > (std::uint64_t{1} << 20)) throw InvalidArgument("vt::Indexer: modulus out of range");
  completions_.assign((n + 1) * m, 0);
  completions_[n * m + a % m] = 1;
  for (std::size_t filled = n; filled-- > 0;) {
    for (std::uint64_t r = 0; r < m; ++r) {
      completions_[filled * m + r] =
          completions_[(filled + 1) * m + r] + completions_[(filled + 1) * m + (r + filled + 1) % m];
    }
  }
  size_ = completions_[0];
}

BinaryWord Indexer::encode(std::uint64_t index) const {
  if (index >= size_) {
    throw InvalidArgument("vt::Indexer: index " + std::to_string(index) + " >= code size " + std::to_string(size_));
  }
  std::vector<Symbol> bits;
  std::uint64_t r = 0;
  for (std::size_t pos = 1; pos <= n_; ++pos) {
    const std::uint64_t with_zero = completions_[pos * m_ + r];
    if (index < with_zero) {
      bits.push_back(0);
    } else {
      index -= with_zero;
      bits.push_back(1);
      r = (r + pos) % m_;
    }
  }
  return BinaryWord(std::move(bits));
}

std::uint64_t Indexer::index_of(const BinaryWord& x) const {
  require_length(x, n_, "vt::Indexer::index_of");
  if (weighted_sum(x, m_) != a_ % m_) throw InvalidArgument("vt::Indexer::index_of: not a codeword");
  std::uint64_t index = 0, r = 0;
  for (std::size_t pos = 1; pos <= n_; ++pos) {
    if (x.symbols()[pos - 1]) {
      index += completions_[pos * m_ + r];
      r = (r + pos) % m_;
    }
  }
  return index;
}

}  // namespace vtc::vt
