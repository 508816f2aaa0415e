#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace vtc {

using Symbol = std::uint8_t;

// Exhaustive operations refuse words longer than this unless the caller
// raises the cap explicitly.
inline constexpr std::size_t kDefaultMaxLength = 24;

struct Limits {
  std::size_t max_length = kDefaultMaxLength;
};

void check_length_cap(std::size_t n, const Limits& limits, const char* what);

/// A word over {0,1}. Positions are 1-based at every accessor that takes a
/// position; symbols() exposes the raw 0-based storage.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<Symbol> bits);
  BinaryWord(std::size_t n, Symbol fill);

  /// Parses '0'/'1' text, leftmost character is position 1.
  static BinaryWord parse(std::string_view text);
  /// Position 1 holds the most significant of the n low bits of value, so
  /// integer order equals lexicographic word order.
  static BinaryWord from_integer(std::uint64_t value, std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  unsigned alphabet() const noexcept { return 2; }
  Symbol at(std::size_t pos) const;
  std::span<const Symbol> symbols() const noexcept { return bits_; }
  std::size_t weight() const noexcept;
  std::uint64_t to_integer() const;
  std::string to_string() const;

  BinaryWord with_deleted(std::size_t pos) const;
  BinaryWord with_inserted(std::size_t pos, Symbol bit) const;
  BinaryWord with_flipped(std::size_t pos) const;
  BinaryWord with_symbols(std::vector<Symbol> bits) const { return BinaryWord(std::move(bits)); }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<Symbol> bits_;
};

/// A word over the alphabet [0, q), 2 <= q <= 256.
class QaryWord {
 public:
  QaryWord() = default;
  QaryWord(std::vector<Symbol> symbols, unsigned q);

  /// Digits when q <= 10, comma-separated decimals otherwise.
  static QaryWord parse(std::string_view text, unsigned q);
  static QaryWord from_binary(const BinaryWord& w);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  unsigned alphabet() const noexcept { return q_; }
  Symbol at(std::size_t pos) const;
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::uint64_t symbol_sum() const noexcept;
  std::string to_string() const;
  BinaryWord to_binary() const;

  QaryWord with_deleted(std::size_t pos) const;
  QaryWord with_inserted(std::size_t pos, Symbol s) const;
  QaryWord with_symbols(std::vector<Symbol> symbols) const { return QaryWord(std::move(symbols), q_); }

  friend bool operator==(const QaryWord&, const QaryWord&) = default;
  friend auto operator<=>(const QaryWord&, const QaryWord&) = default;

 private:
  std::vector<Symbol> symbols_;
  unsigned q_ = 2;
};

template <class W>
concept Word = requires(const W& w, std::vector<Symbol> v) {
  { w.size() } -> std::convertible_to<std::size_t>;
  { w.symbols() } -> std::convertible_to<std::span<const Symbol>>;
  { w.alphabet() } -> std::convertible_to<unsigned>;
  { w.with_symbols(std::move(v)) } -> std::same_as<W>;
};

struct Run {
  Symbol value;
  std::size_t start;  // 1-based
  std::size_t length;

  friend bool operator==(const Run&, const Run&) = default;
};

using RunDecomposition = std::vector<Run>;

template <Word W>
RunDecomposition runs(const W& w) {
  RunDecomposition out;
  auto s = w.symbols();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!out.empty() && out.back().value == s[i]) {
      ++out.back().length;
    } else {
      out.push_back({s[i], i + 1, 1});
    }
  }
  return out;
}

namespace detail {

template <Word W>
std::set<W> single_deletions(const W& w) {
  std::set<W> out;
  auto s = w.symbols();
  for (std::size_t i = 0; i < s.size(); ++i) {
    // Deleting any symbol of a run gives the same word; take the run's last.
    if (i + 1 < s.size() && s[i + 1] == s[i]) continue;
    std::vector<Symbol> v;
    v.reserve(s.size() - 1);
    v.insert(v.end(), s.begin(), s.begin() + i);
    v.insert(v.end(), s.begin() + i + 1, s.end());
    out.insert(w.with_symbols(std::move(v)));
  }
  return out;
}

template <Word W>
std::set<W> single_insertions(const W& w) {
  std::set<W> out;
  auto s = w.symbols();
  for (std::size_t i = 0; i <= s.size(); ++i) {
    for (unsigned c = 0; c < w.alphabet(); ++c) {
      std::vector<Symbol> v;
      v.reserve(s.size() + 1);
      v.insert(v.end(), s.begin(), s.begin() + i);
      v.push_back(static_cast<Symbol>(c));
      v.insert(v.end(), s.begin() + i, s.end());
      out.insert(w.with_symbols(std::move(v)));
    }
  }
  return out;
}

template <Word W, class Step>
std::set<W> iterate_ball(const W& w, std::size_t e, Step step) {
  std::set<W> level{w};
  for (std::size_t k = 0; k < e; ++k) {
    std::set<W> next;
    for (const auto& v : level) next.merge(step(v));
    level = std::move(next);
  }
  return level;
}

}  // namespace detail

/// D_e(w): every word reachable by exactly e deletions.
template <Word W>
std::set<W> deletion_ball(const W& w, std::size_t e, const Limits& limits = {}) {
  if (e > w.size()) throw InvalidArgument("deletion_ball: more deletions than symbols");
  check_length_cap(w.size(), limits, "deletion_ball");
  return detail::iterate_ball(w, e, [](const W& v) { return detail::single_deletions(v); });
}

/// Every word reachable by exactly e insertions of symbols from w's alphabet.
template <Word W>
std::set<W> insertion_ball(const W& w, std::size_t e, const Limits& limits = {}) {
  check_length_cap(w.size() + e, limits, "insertion_ball");
  return detail::iterate_ball(w, e, [](const W& v) { return detail::single_insertions(v); });
}

/// Words obtained by removing s consecutive symbols.
template <Word W>
std::set<W> burst_deletion_ball(const W& w, std::size_t s) {
  if (s > w.size()) throw InvalidArgument("burst_deletion_ball: burst longer than word");
  std::set<W> out;
  auto sym = w.symbols();
  for (std::size_t j = 0; j + s <= sym.size(); ++j) {
    std::vector<Symbol> v(sym.begin(), sym.begin() + j);
    v.insert(v.end(), sym.begin() + j + s, sym.end());
    out.insert(w.with_symbols(std::move(v)));
  }
  return out;
}

/// True iff D_e(u) and D_e(v) intersect.
template <Word W>
bool confusable(const W& u, const W& v, std::size_t e, const Limits& limits = {}) {
  if (u.size() != v.size()) throw InvalidArgument("confusable: words differ in length");
  if (u == v) return true;
  auto bu = deletion_ball(u, e, limits);
  for (const auto& d : deletion_ball(v, e, limits)) {
    if (bu.contains(d)) return true;
  }
  return false;
}

}  // namespace vtc
