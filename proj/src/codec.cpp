#include "codec.hpp"

#include <bit>
#include <string>

#include "burst.hpp"
#include "channels.hpp"
#include "tenengolts.hpp"
#include "vt_binary.hpp"
#include "vt_indel.hpp"

namespace vtc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNone: return "none";
    case ErrorKind::kDeletion: return "deletion";
    case ErrorKind::kInsertion: return "insertion";
    case ErrorKind::kZFlip: return "z-flip";
    case ErrorKind::kSubstitution: return "substitution";
    case ErrorKind::kBurst: return "burst";
  }
  return "unknown";
}

std::string_view to_string(CodeFamily family) {
  switch (family) {
    case CodeFamily::kVt: return "vt";
    case CodeFamily::kShiftedVt: return "shifted-vt";
    case CodeFamily::kTenengolts: return "tenengolts";
    case CodeFamily::kBurst: return "burst";
    case CodeFamily::kRepetition: return "repetition";
  }
  return "unknown";
}

CodeFamily parse_family(std::string_view name) {
  for (auto f : {CodeFamily::kVt, CodeFamily::kShiftedVt, CodeFamily::kTenengolts, CodeFamily::kBurst,
                 CodeFamily::kRepetition}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown code family '" + std::string(name) + "'");
}

namespace {

// Number of whole data bits an index encoder over `size` codewords carries.
std::size_t index_bits(std::uint64_t size) {
  return size == 0 ? 0 : static_cast<std::size_t>(std::bit_width(size) - 1);
}

std::uint64_t bits_to_index(const QaryWord& data, std::size_t expected) {
  if (data.alphabet() != 2 || data.size() != expected) {
    throw InvalidArgument("expected " + std::to_string(expected) + " binary data symbols");
  }
  return data.to_binary().to_integer();
}

QaryWord random_bits(Rng& rng, std::size_t count) {
  std::vector<Symbol> bits(count);
  for (auto& b : bits) b = static_cast<Symbol>(rng.next() >> 63);
  return QaryWord(std::move(bits), 2);
}

BinaryWord require_binary(const QaryWord& w) {
  if (w.alphabet() != 2) throw InvalidArgument("binary code given a non-binary word");
  return w.to_binary();
}

QaryDecodeOutcome unchanged_or_corrupt(const QaryWord& y, bool member, const char* what) {
  if (!member) throw CorruptInput(std::string(what) + ": received word is not a codeword");
  return {y, ErrorKind::kNone, std::nullopt, std::nullopt};
}

class VtCodec final : public Codec {
 public:
  explicit VtCodec(const CodecConfig& c) : Codec(c), params_(c.n, c.a) {}

  CodeFamily family() const override { return CodeFamily::kVt; }
  unsigned alphabet() const override { return 2; }
  std::size_t length() const override { return params_.n(); }
  std::size_t data_length() const override { return vt::data_length(params_.n()); }

  QaryWord encode(const QaryWord& data) const override {
    if (data.size() != data_length()) {
      throw InvalidArgument("vt encode: expected " + std::to_string(data_length()) + " data bits");
    }
    return QaryWord::from_binary(vt::systematic_encode(require_binary(data), params_));
  }

  QaryDecodeOutcome decode(const QaryWord& received) const override {
    const auto y = require_binary(received);
    const std::size_t n = params_.n();
    if (y.size() + 1 == n) return to_qary(vt::decode_deletion(y, params_));
    if (y.size() == n + 1) return to_qary(vt::decode_insertion(y, params_));
    if (y.size() == n) return to_qary(vt::decode_z_channel(y, params_));
    throw CorruptInput("vt decode: length " + std::to_string(y.size()) + " is not within one edit of " +
                       std::to_string(n));
  }

  bool is_codeword(const QaryWord& w) const override { return vt::is_codeword(require_binary(w), params_); }

  std::vector<QaryWord> enumerate(const Limits& limits) const override {
    std::vector<QaryWord> out;
    for (const auto& w : vt::enumerate(params_, limits)) out.push_back(QaryWord::from_binary(w));
    return out;
  }

  QaryWord sample(Rng& rng) const override { return encode(random_bits(rng, data_length())); }

 private:
  vt::Params params_;
};

class ShiftedVtCodec final : public Codec {
 public:
  explicit ShiftedVtCodec(const CodecConfig& c)
      : Codec(c), params_(c.n, c.a), indexer_(c.n, c.a, params_.modulus()) {}

  CodeFamily family() const override { return CodeFamily::kShiftedVt; }
  unsigned alphabet() const override { return 2; }
  std::size_t length() const override { return params_.n(); }
  std::size_t data_length() const override { return index_bits(indexer_.size()); }

  QaryWord encode(const QaryWord& data) const override {
    if (indexer_.size() == 0) throw InvalidArgument("shifted-vt encode: the code is empty");
    return QaryWord::from_binary(indexer_.encode(bits_to_index(data, data_length())));
  }

  QaryDecodeOutcome decode(const QaryWord& received) const override {
    return to_qary(shifted::decode(require_binary(received), params_));
  }

  bool is_codeword(const QaryWord& w) const override { return shifted::is_codeword(require_binary(w), params_); }

  std::vector<QaryWord> enumerate(const Limits& limits) const override {
    std::vector<QaryWord> out;
    for (const auto& w : shifted::enumerate(params_, limits)) out.push_back(QaryWord::from_binary(w));
    return out;
  }

  QaryWord sample(Rng& rng) const override {
    if (indexer_.size() == 0) throw InvalidArgument("shifted-vt: the code is empty");
    return QaryWord::from_binary(indexer_.encode(rng.uniform(indexer_.size())));
  }

 private:
  shifted::Params params_;
  vt::Indexer indexer_;
};

class TenengoltsCodec final : public Codec {
 public:
  explicit TenengoltsCodec(const CodecConfig& c) : Codec(c), params_(c.n, c.q, c.a, c.b), indexer_(params_) {}

  CodeFamily family() const override { return CodeFamily::kTenengolts; }
  unsigned alphabet() const override { return params_.q(); }
  std::size_t length() const override { return params_.n(); }
  std::size_t data_length() const override { return index_bits(indexer_.size()); }

  QaryWord encode(const QaryWord& data) const override {
    if (indexer_.size() == 0) throw InvalidArgument("tenengolts encode: the code is empty");
    return indexer_.encode(bits_to_index(data, data_length()));
  }

  QaryDecodeOutcome decode(const QaryWord& y) const override {
    const std::size_t n = params_.n();
    if (y.size() + 1 == n) return tenengolts::decode_deletion(y, params_);
    if (y.size() == n + 1) return tenengolts::decode_insertion(y, params_);
    if (y.size() == n) return unchanged_or_corrupt(y, tenengolts::is_codeword(y, params_), "tenengolts decode");
    throw CorruptInput("tenengolts decode: length " + std::to_string(y.size()) + " is not within one edit of " +
                       std::to_string(n));
  }

  bool is_codeword(const QaryWord& w) const override { return tenengolts::is_codeword(w, params_); }

  std::vector<QaryWord> enumerate(const Limits& limits) const override {
    return tenengolts::enumerate(params_, limits);
  }

  QaryWord sample(Rng& rng) const override {
    if (indexer_.size() == 0) throw InvalidArgument("tenengolts: the code is empty");
    return indexer_.encode(rng.uniform(indexer_.size()));
  }

 private:
  tenengolts::Params params_;
  tenengolts::Indexer indexer_;
};

class BurstCodec final : public Codec {
 public:
  explicit BurstCodec(const CodecConfig& c) : Codec(c), params_(c.s, c.k, c.residues) {}

  CodeFamily family() const override { return CodeFamily::kBurst; }
  unsigned alphabet() const override { return 2; }
  std::size_t length() const override { return params_.n(); }
  std::size_t data_length() const override { return burst::data_length(params_); }

  // Data is the concatenation of the s row blocks.
  QaryWord encode(const QaryWord& data) const override {
    if (data.size() != data_length()) {
      throw InvalidArgument("burst encode: expected " + std::to_string(data_length()) + " data bits");
    }
    const auto bits = require_binary(data);
    const std::size_t block = vt::data_length(params_.row_length());
    std::vector<BinaryWord> blocks;
    for (std::size_t r = 0; r < params_.depth(); ++r) {
      auto first = bits.symbols().begin() + static_cast<std::ptrdiff_t>(r * block);
      blocks.emplace_back(std::vector<Symbol>(first, first + static_cast<std::ptrdiff_t>(block)));
    }
    return QaryWord::from_binary(burst::encode_systematic(blocks, params_));
  }

  QaryDecodeOutcome decode(const QaryWord& received) const override {
    const auto y = require_binary(received);
    if (y.size() == params_.n()) {
      return unchanged_or_corrupt(received, burst::is_codeword(y, params_), "burst decode");
    }
    return {QaryWord::from_binary(burst::decode_burst(y, params_)), ErrorKind::kBurst, std::nullopt, std::nullopt};
  }

  bool is_codeword(const QaryWord& w) const override { return burst::is_codeword(require_binary(w), params_); }

  std::vector<QaryWord> enumerate(const Limits& limits) const override {
    std::vector<QaryWord> out;
    for (const auto& w : burst::enumerate(params_, limits)) out.push_back(QaryWord::from_binary(w));
    return out;
  }

  QaryWord sample(Rng& rng) const override { return encode(random_bits(rng, data_length())); }

 private:
  burst::Params params_;
};

class RepetitionCodec final : public Codec {
 public:
  explicit RepetitionCodec(const CodecConfig& c) : Codec(c), r_(c.r), q_(c.q), message_length_(c.n) {
    if (r_ < 1) throw InvalidArgument("repetition factor r must be >= 1");
    if (q_ < 2 || q_ > 256) throw InvalidArgument("alphabet size must be in [2, 256]");
  }

  CodeFamily family() const override { return CodeFamily::kRepetition; }
  unsigned alphabet() const override { return q_; }
  std::size_t length() const override { return message_length_ * r_; }
  unsigned data_alphabet() const override { return q_; }
  std::size_t data_length() const override { return message_length_; }

  QaryWord encode(const QaryWord& data) const override {
    if (message_length_ != 0 && data.size() != message_length_) {
      throw InvalidArgument("repetition encode: expected " + std::to_string(message_length_) + " symbols");
    }
    return channels::repetition_encode(data, r_);
  }

  QaryDecodeOutcome decode(const QaryWord& received) const override {
    std::optional<std::size_t> expected;
    if (message_length_ != 0) expected = message_length_;
    auto x = channels::repetition_encode(channels::repetition_decode(received, r_, expected), r_);
    const std::size_t missing = x.size() - received.size();
    const auto kind = missing == 0 ? ErrorKind::kNone : ErrorKind::kDeletion;
    return {std::move(x), kind, std::nullopt, std::nullopt};
  }

  bool is_codeword(const QaryWord& w) const override {
    if (w.alphabet() != q_ || w.size() % r_ != 0) return false;
    if (message_length_ != 0 && w.size() != length()) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w.symbols()[i] != w.symbols()[i - i % r_]) return false;
    }
    return true;
  }

  std::vector<QaryWord> enumerate(const Limits& limits) const override {
    if (message_length_ == 0) throw InvalidArgument("repetition enumerate: message length n is required");
    check_length_cap(message_length_, limits, "repetition enumerate");
    std::vector<QaryWord> out;
    std::vector<Symbol> digits(message_length_, 0);
    while (true) {
      out.push_back(channels::repetition_encode(QaryWord(digits, q_), r_));
      std::size_t i = digits.size();
      while (i > 0 && digits[i - 1] == q_ - 1) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
    return out;
  }

  QaryWord sample(Rng& rng) const override {
    if (message_length_ == 0) throw InvalidArgument("repetition sample: message length n is required");
    std::vector<Symbol> data(message_length_);
    for (auto& d : data) d = static_cast<Symbol>(rng.uniform(q_));
    return channels::repetition_encode(QaryWord(std::move(data), q_), r_);
  }

 private:
  std::size_t r_;
  unsigned q_;
  std::size_t message_length_;
};

}  // namespace

std::unique_ptr<Codec> make_codec(const CodecConfig& config) {
  switch (config.family) {
    case CodeFamily::kVt: return std::make_unique<VtCodec>(config);
    case CodeFamily::kShiftedVt: return std::make_unique<ShiftedVtCodec>(config);
    case CodeFamily::kTenengolts: return std::make_unique<TenengoltsCodec>(config);
    case CodeFamily::kBurst: return std::make_unique<BurstCodec>(config);
    case CodeFamily::kRepetition: return std::make_unique<RepetitionCodec>(config);
  }
  throw InvalidArgument("unknown code family");
}

}  // namespace vtc
