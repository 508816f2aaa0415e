#include "words.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace vtc {

void check_length_cap(std::size_t n, const Limits& limits, const char* what) {
  if (n > limits.max_length) {
    throw ResourceLimit(std::string(what) + ": length " + std::to_string(n) + " exceeds cap " +
                        std::to_string(limits.max_length));
  }
}

namespace {

void check_position(std::size_t pos, std::size_t hi) {
  if (pos < 1 || pos > hi) {
    throw InvalidArgument("position " + std::to_string(pos) + " outside [1, " + std::to_string(hi) + "]");
  }
}

std::vector<Symbol> erase_at(std::span<const Symbol> s, std::size_t pos) {
  check_position(pos, s.size());
  std::vector<Symbol> v(s.begin(), s.end());
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos - 1));
  return v;
}

std::vector<Symbol> insert_at(std::span<const Symbol> s, std::size_t pos, Symbol value) {
  check_position(pos, s.size() + 1);
  std::vector<Symbol> v(s.begin(), s.end());
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos - 1), value);
  return v;
}

}  // namespace

BinaryWord::BinaryWord(std::vector<Symbol> bits) : bits_(std::move(bits)) {
  for (Symbol b : bits_) {
    if (b > 1) throw InvalidArgument("binary word contains a symbol other than 0/1");
  }
}

BinaryWord::BinaryWord(std::size_t n, Symbol fill) : BinaryWord(std::vector<Symbol>(n, fill)) {}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<Symbol> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("invalid binary word '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<Symbol>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::from_integer(std::uint64_t value, std::size_t n) {
  if (n > 64) throw InvalidArgument("from_integer: n > 64");
  std::vector<Symbol> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[n - 1 - i] = static_cast<Symbol>((value >> i) & 1U);
  return BinaryWord(std::move(bits));
}

Symbol BinaryWord::at(std::size_t pos) const {
  check_position(pos, bits_.size());
  return bits_[pos - 1];
}

std::size_t BinaryWord::weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), Symbol{1}));
}

std::uint64_t BinaryWord::to_integer() const {
  if (bits_.size() > 64) throw InvalidArgument("to_integer: word longer than 64 bits");
  std::uint64_t v = 0;
  for (Symbol b : bits_) v = (v << 1) | b;
  return v;
}

std::string BinaryWord::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

BinaryWord BinaryWord::with_deleted(std::size_t pos) const { return BinaryWord(erase_at(bits_, pos)); }

BinaryWord BinaryWord::with_inserted(std::size_t pos, Symbol bit) const {
  return BinaryWord(insert_at(bits_, pos, bit));
}

BinaryWord BinaryWord::with_flipped(std::size_t pos) const {
  check_position(pos, bits_.size());
  auto v = bits_;
  v[pos - 1] ^= 1U;
  return BinaryWord(std::move(v));
}

QaryWord::QaryWord(std::vector<Symbol> symbols, unsigned q) : symbols_(std::move(symbols)), q_(q) {
  if (q < 2 || q > 256) throw InvalidArgument("alphabet size must be in [2, 256]");
  for (Symbol s : symbols_) {
    if (s >= q) {
      throw InvalidArgument("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
    }
  }
}

QaryWord QaryWord::parse(std::string_view text, unsigned q) {
  if (q < 2 || q > 256) throw InvalidArgument("alphabet size must be in [2, 256]");
  std::vector<Symbol> symbols;
  auto bad = [&] { return InvalidArgument("invalid " + std::to_string(q) + "-ary word '" + std::string(text) + "'"); };
  if (q <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw bad();
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
  } else if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value > 255) throw bad();
      symbols.push_back(static_cast<Symbol>(value));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return QaryWord(std::move(symbols), q);
}

QaryWord QaryWord::from_binary(const BinaryWord& w) {
  return QaryWord(std::vector<Symbol>(w.symbols().begin(), w.symbols().end()), 2);
}

Symbol QaryWord::at(std::size_t pos) const {
  check_position(pos, symbols_.size());
  return symbols_[pos - 1];
}

std::uint64_t QaryWord::symbol_sum() const noexcept {
  return std::accumulate(symbols_.begin(), symbols_.end(), std::uint64_t{0});
}

std::string QaryWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (q_ <= 10) {
      out.push_back(static_cast<char>('0' + symbols_[i]));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(symbols_[i]);
    }
  }
  return out;
}

BinaryWord QaryWord::to_binary() const {
  return BinaryWord(symbols_);
}

QaryWord QaryWord::with_deleted(std::size_t pos) const { return QaryWord(erase_at(symbols_, pos), q_); }

QaryWord QaryWord::with_inserted(std::size_t pos, Symbol s) const {
  return QaryWord(insert_at(symbols_, pos, s), q_);
}

}  // namespace vtc
